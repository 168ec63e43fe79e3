#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "symtau/elliptic.hpp"
#include "symtau/jsonio.hpp"
#include "symtau/lattice.hpp"
#include "symtau/pde.hpp"

using namespace symtau;

namespace {

std::array<int, 4> parse_k(const std::string& s) {
    std::array<int, 4> k{};
    std::stringstream ss(s);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= 4) throw UsageError("k needs exactly 4 integers");
        k[i++] = std::stoi(item);
    }
    if (i != 4) throw UsageError("k needs exactly 4 integers");
    return k;
}

num::Complex parse_tau(const std::string& s) {
    // "a+bi" / "a-bi" / "bi" with decimal literals
    std::string t = s;
    if (t.empty() || t.back() != 'i') throw UsageError("tau must end in 'i' (format a+bi)");
    t.pop_back();
    size_t split = t.find_last_of("+-");
    std::string re = "0", im;
    if (split == std::string::npos || split == 0) {
        im = t;
    } else {
        re = t.substr(0, split);
        im = t.substr(split);
        if (im == "+" || im == "-") im += "1";
    }
    if (im.empty() || im == "+") im = "1";
    if (im == "-") im = "-1";
    return num::Complex(num::Real(re.c_str()), num::Real(im.c_str()));
}

void emit(const json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(2) << std::endl;
    } else {
        std::ofstream out(path);
        out << canonical_dump(j);
    }
}

json tfun_json(const TFun& t) {
    json j;
    j["k"] = t.idx.k;
    j["m"] = t.idx.m;
    j["dual"] = t.dual;
    j["num"] = to_json(t.num);
    json den = json::array();
    for (const RatFun& c : t.den1.coeffs()) den.push_back(to_json(c));
    j["den1"] = std::move(den);
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"exact kernel and numeric validator for the symmetric tau-polynomial family"};
    app.require_subcommand(1);

    std::string cache_override;
    app.add_option("--cache-dir", cache_override,
                   "cache directory (also via SYMTAU_CACHE_DIR)");

    std::string kstr, outpath, taustr = "1.2i";
    int nval = std::numeric_limits<int>::min();
    int mval = std::numeric_limits<int>::min();
    bool dual = false;
    int window = 3, mmax = 3, jobs = 1, prec = 50, grid = 16;

    auto* gen = app.add_subcommand("gen", "construct T_n^{(k)} (or its dual) and print JSON");
    gen->add_option("--k", kstr, "lattice index k0,k1,k2,k3")->required();
    gen->add_option("--n", nval, "half-degree n (sets m = 2n - |k|)");
    gen->add_option("--m", mval, "free variable count");
    gen->add_flag("--dual", dual, "construct the dual family U instead");
    gen->add_option("--output,-o", outpath, "write JSON here instead of stdout");

    auto* tv = app.add_subcommand("tau", "compute the scalar t^{(k)}");
    tv->add_option("--k", kstr, "lattice index k0,k1,k2,k3")->required();
    tv->add_option("--output,-o", outpath, "write JSON here instead of stdout");

    auto* vp = app.add_subcommand("verify-pde", "run the operator annihilation suite");
    vp->add_option("--window", window, "max sum |k_j| (default 3)");
    vp->add_option("--mmax", mmax, "max variable count (default 3)");
    vp->add_option("--jobs,-j", jobs, "worker threads");
    vp->add_option("--output,-o", outpath, "write JSON report here");

    int bwindow = 4;
    auto* vb = app.add_subcommand("verify-bilinear", "run the tau-lattice bilinear suite");
    vb->add_option("--window", bwindow, "max sum |k_j| (default 4)");
    vb->add_option("--jobs,-j", jobs, "worker threads");
    vb->add_option("--output,-o", outpath, "write JSON report here");

    auto* ve = app.add_subcommand("verify-elliptic", "run the numeric identity catalogue");
    ve->add_option("--tau", taustr, "tau as a+bi (default 1.2i)");
    ve->add_option("--prec", prec, "target precision in decimal digits (>= 30)");
    ve->add_option("--grid", grid, "sample points per identity");
    ve->add_option("--output,-o", outpath, "write JSON report here");

    std::string cache_cmd = "info";
    auto* cc = app.add_subcommand("cache", "inspect or clear the disk cache");
    cc->add_option("command", cache_cmd, "info | clear");

    CLI11_PARSE(app, argc, argv);
    if (!cache_override.empty()) set_cache_dir(cache_override);

    if (gen->parsed()) {
        auto k = parse_k(kstr);
        if (mval == std::numeric_limits<int>::min()) {
            if (nval == std::numeric_limits<int>::min())
                throw UsageError("gen needs --n or --m");
            mval = 2 * nval - (k[0] + k[1] + k[2] + k[3]);
        }
        if (mval < 0) throw UsageError("negative m");
        KIndex idx(k, mval);
        TFun t = dual ? general_U(idx) : general_T(idx);
        emit(tfun_json(t), outpath);
        return 0;
    }

    if (tv->parsed()) {
        auto k = parse_k(kstr);
        RatFun t = tau(k);
        json j;
        j["k"] = k;
        j["pretty"] = t.pretty();
        j["value"] = to_json(t);
        if (outpath.empty()) std::cout << t.pretty() << "\n";
        else emit(j, outpath);
        return 0;
    }

    if (vp->parsed()) {
        auto recs = pde_window_verify(window, mmax, jobs);
        json arr = json::array();
        bool ok = true;
        for (const auto& r : recs) {
            json j;
            j["k"] = r.k;
            j["n"] = (r.k[0] + r.k[1] + r.k[2] + r.k[3] + r.m) / 2;
            j["m"] = r.m;
            j["dual"] = r.dual;
            j["residual_zero"] = r.residual_zero;
            j["wall_time"] = r.seconds;
            arr.push_back(std::move(j));
            ok = ok && r.residual_zero;
        }
        json rep;
        rep["window"] = window;
        rep["records"] = std::move(arr);
        rep["pass"] = ok;
        emit(rep, outpath);
        std::cerr << (ok ? "verify-pde: all residuals zero\n" : "verify-pde: FAILURES\n");
        return ok ? 0 : 1;
    }

    if (vb->parsed()) {
        LatticeReport rep = lattice_verify(bwindow, jobs);
        json arr = json::array();
        for (const auto& row : rep.rows) {
            json j;
            j["k"] = row.k;
            j["n_norm2"] = row.norm2;
            j["t"] = to_json(row.t);
            j["pretty"] = row.t.pretty();
            j["nonzero"] = row.nonzero;
            auto status = [](char c) {
                return c == 'p' ? "pass" : c == 'f' ? "fail" : "skipped";
            };
            j["identity_a"] = status(row.id_a);
            j["identity_b"] = status(row.id_b);
            arr.push_back(std::move(j));
        }
        json j;
        j["window"] = rep.window;
        j["checked"] = rep.checked;
        j["failed"] = rep.failed;
        j["all_nonzero"] = rep.all_nonzero;
        j["rows"] = std::move(arr);
        bool ok = rep.failed == 0 && rep.all_nonzero;
        j["pass"] = ok;
        emit(j, outpath);
        std::cerr << (ok ? "verify-bilinear: all residuals zero\n"
                         : "verify-bilinear: FAILURES\n");
        return ok ? 0 : 1;
    }

    if (ve->parsed()) {
        num::Complex tv_ = parse_tau(taustr);
        auto results = num::verify_identities(tv_, prec, grid);
        json arr = json::array();
        bool ok = true;
        for (const auto& r : results) {
            json j;
            j["identity"] = r.name;
            j["tau"] = taustr;
            j["grid_size"] = grid;
            j["max_residual"] = r.max_residual;
            j["tolerance"] = r.tolerance;
            j["finite_difference"] = r.finite_difference;
            j["pass"] = r.pass;
            ok = ok && r.pass;
            arr.push_back(std::move(j));
        }
        // the two Schroedinger instances plus the zero-potential control
        json sch = json::array();
        for (auto k : {std::array<int, 4>{1, 0, 0, 0}, std::array<int, 4>{2, 1, 0, 0}}) {
            auto r = num::verify_schroedinger(KIndex(k, 1), tv_, prec, 12);
            json j;
            j["k"] = r.k;
            j["m"] = r.m;
            j["spread_over_mean"] = r.spread_over_mean;
            j["tolerance"] = r.tolerance;
            j["C"] = r.c_mean;
            j["pass"] = r.pass;
            ok = ok && r.pass;
            sch.push_back(std::move(j));
        }
        {
            auto r = num::verify_schroedinger(KIndex({1, 0, 0, 0}, 1), tv_, prec, 12, true);
            json j;
            j["k"] = r.k;
            j["zero_potential"] = true;
            j["spread_over_mean"] = r.spread_over_mean;
            j["breaks_constancy"] = !r.pass;
            ok = ok && !r.pass;
            sch.push_back(std::move(j));
        }
        json rep;
        rep["identities"] = std::move(arr);
        rep["schroedinger"] = std::move(sch);
        rep["pass"] = ok;
        emit(rep, outpath);
        std::cerr << (ok ? "verify-elliptic: all identities pass\n"
                         : "verify-elliptic: FAILURES\n");
        return ok ? 0 : 1;
    }

    if (cc->parsed()) {
        if (cache_cmd == "clear") {
            size_t n = cache_clear();
            std::cout << "removed " << n << " cache entries\n";
        } else {
            std::cout << "cache dir: " << (cache_dir().empty() ? "(disabled)" : cache_dir())
                      << "\n";
            for (const auto& f : cache_list()) std::cout << "  " << f << "\n";
        }
        return 0;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrKind::internal ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
