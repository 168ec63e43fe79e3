#include "symtau/kernel.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "symtau/jsonio.hpp"

namespace fs = std::filesystem;

namespace symtau {

KIndex::KIndex(std::array<int, 4> kk, int mm) : k(kk), m(mm) {
    if (m < 0) throw UsageError("negative variable count");
    if (((ksum() + m) % 2 + 2) % 2 != 0) throw UsageError("|k| + m must be even for " + str());
}

int KIndex::abs_sum() const {
    int s = 0;
    for (int v : k) s += v < 0 ? -v : v;
    return s;
}

std::array<int, 4> KIndex::kplus() const {
    std::array<int, 4> r{};
    for (int i = 0; i < 4; ++i) r[i] = k[i] > 0 ? k[i] : 0;
    return r;
}

std::array<int, 4> KIndex::kminus() const {
    std::array<int, 4> r{};
    for (int i = 0; i < 4; ++i) r[i] = k[i] < 0 ? -k[i] : 0;
    return r;
}

int KIndex::kplus_sum() const {
    auto kp = kplus();
    return kp[0] + kp[1] + kp[2] + kp[3];
}

int KIndex::kminus_sum() const {
    auto km = kminus();
    return km[0] + km[1] + km[2] + km[3];
}

std::string KIndex::str() const {
    std::ostringstream os;
    os << "k=(" << k[0] << "," << k[1] << "," << k[2] << "," << k[3] << "),m=" << m;
    return os.str();
}

int n_norm2(const std::array<int, 4>& k) {
    int s = 0;
    for (int v : k) s += std::abs(2 * v + 1);
    return s;
}

const XiTable& XiTable::get() {
    static const XiTable table = [] {
        XiTable t;
        RatFun z = RatFun::zeta();
        RatFun two_z1 = RatFun(2) * z + RatFun(1);
        RatFun zp2 = z + RatFun(2);
        t.xi = {two_z1, z / zp2, z * two_z1 / zp2, RatFun(1)};
        t.eta_finite = {true, false, true, true};
        t.eta = {RatFun(), RatFun(), two_z1 / zp2, z};
        return t;
    }();
    return table;
}

MPoly g_kernel() { return g_pair(0, 1, 2); }

MPoly g_pair(int i, int j, int nvars) {
    // G(x,y) = (z+2)xy(x+y) - z(x^2+y^2) - 2(z^2+3z+1)xy + z(2z+1)(x+y)
    RatFun z = RatFun::zeta();
    RatFun zp2 = z + RatFun(2);
    RatFun mid = RatFun(-2) * (z * z + RatFun(3) * z + RatFun(1));
    RatFun lin = z * (RatFun(2) * z + RatFun(1));
    MPoly g(nvars);
    auto term = [&](int ei, int ej, const RatFun& c) {
        Expo e(nvars);
        e[i] = static_cast<uint16_t>(ei);
        e[j] = static_cast<uint16_t>(ej);
        g.add_term(e, c);
    };
    term(2, 1, zp2);
    term(1, 2, zp2);
    term(2, 0, -z);
    term(0, 2, -z);
    term(1, 1, mid);
    term(1, 0, lin);
    term(0, 1, lin);
    return g;
}

XPoly g_at_xi(int l) {
    const RatFun& y = XiTable::get().xi[l];
    RatFun z = RatFun::zeta();
    RatFun zp2 = z + RatFun(2);
    RatFun mid = RatFun(-2) * (z * z + RatFun(3) * z + RatFun(1));
    RatFun lin = z * (RatFun(2) * z + RatFun(1));
    // collect G(x,y) by powers of x
    std::vector<RatFun> c(3);
    c[2] = zp2 * y - z;
    c[1] = zp2 * y * y + mid * y + lin;
    c[0] = -z * y * y + lin * y;
    return XPoly(std::move(c));
}

RatFun g_scalar(int i, int j) { return g_at_xi(j).eval(XiTable::get().xi[i]); }

XPoly quartic_a() {
    RatFun z = RatFun::zeta();
    RatFun zp2 = z + RatFun(2);
    XPoly a = XPoly(zp2 * zp2);
    for (int l = 0; l < 4; ++l) a = a * XPoly::linear_root(XiTable::get().xi[l]);
    return a;
}

RatFun dcoef() {
    RatFun z = RatFun::zeta();
    return RatFun(2) * z * (z - RatFun(1)) * (z + RatFun(1)) * (z + RatFun(2)) *
           (RatFun(2) * z + RatFun(1));
}

// ---------------------------------------------------------------------------
// cache plumbing

namespace {

std::mutex g_cache_mutex;
std::string g_cache_dir = [] {
    const char* env = std::getenv("SYMTAU_CACHE_DIR");
    return env ? std::string(env) : std::string();
}();

bool disk_load(const std::string& key, json& out) {
    if (g_cache_dir.empty()) return false;
    fs::path p = fs::path(g_cache_dir) / (key + ".json");
    std::ifstream in(p);
    if (!in) return false;
    try {
        out = json::parse(in);
        return true;
    } catch (...) {
        return false;
    }
}

void disk_store(const std::string& key, const json& j) {
    if (g_cache_dir.empty()) return;
    std::error_code ec;
    fs::create_directories(g_cache_dir, ec);
    fs::path p = fs::path(g_cache_dir) / (key + ".json");
    fs::path tmp = p;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << canonical_dump(j);
    }
    fs::rename(tmp, p, ec);
}

} // namespace

void set_cache_dir(const std::string& dir) {
    std::lock_guard lk(g_cache_mutex);
    g_cache_dir = dir;
}

const std::string& cache_dir() { return g_cache_dir; }

std::vector<std::string> cache_list() {
    std::vector<std::string> out;
    if (g_cache_dir.empty() || !fs::exists(g_cache_dir)) return out;
    for (const auto& e : fs::directory_iterator(g_cache_dir))
        if (e.path().extension() == ".json") out.push_back(e.path().filename().string());
    std::sort(out.begin(), out.end());
    return out;
}

size_t cache_clear() {
    size_t n = 0;
    if (g_cache_dir.empty() || !fs::exists(g_cache_dir)) return n;
    for (const auto& e : fs::directory_iterator(g_cache_dir))
        if (e.path().extension() == ".json") {
            std::error_code ec;
            if (fs::remove(e.path(), ec)) ++n;
        }
    return n;
}

// ---------------------------------------------------------------------------
// base polynomials

namespace {

MPoly bareiss_det(std::vector<std::vector<MPoly>> M) {
    const int n = static_cast<int>(M.size());
    if (n == 0) return MPoly::constant(0, RatFun(1));
    int nvars = M[0][0].nvars();
    int sign = 1;
    MPoly prev = MPoly::constant(nvars, RatFun(1));
    for (int k = 0; k + 1 < n; ++k) {
        if (M[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!M[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return MPoly(nvars); // singular: zero determinant
            std::swap(M[k], M[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]).exact_div(prev);
            M[i][k] = MPoly(nvars);
        }
        prev = M[k][k];
    }
    MPoly det = M[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

MPoly divide_vandermonde(MPoly p, int lo, int hi) {
    // exact division by prod_{lo <= i < j < hi} (x_j - x_i)
    int nvars = p.nvars();
    for (int i = lo; i < hi; ++i)
        for (int j = i + 1; j < hi; ++j)
            p = p.exact_div(MPoly::var(nvars, j) - MPoly::var(nvars, i));
    return p;
}

std::map<int, MPoly> g_base_memo;
std::mutex g_base_mutex;

MPoly compute_base_T(int n) {
    if (n == 0) return MPoly::constant(0, RatFun(1));
    const int N = 2 * n;
    // row-cleared Cauchy-type matrix: M_ij = prod_{l != j} G(x_i, x_{n+l})
    std::vector<std::vector<MPoly>> G(n, std::vector<MPoly>(n, MPoly(N)));
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l) G[i][l] = g_pair(i, n + l, N);
    std::vector<std::vector<MPoly>> M(n, std::vector<MPoly>(n, MPoly(N)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            MPoly prod = MPoly::constant(N, RatFun(1));
            for (int l = 0; l < n; ++l)
                if (l != j) prod = prod * G[i][l];
            M[i][j] = prod;
        }
    MPoly det = bareiss_det(std::move(M));
    det = divide_vandermonde(std::move(det), 0, n);
    det = divide_vandermonde(std::move(det), n, N);
    return det;
}

} // namespace

const MPoly& base_T(int n) {
    if (n < 0) throw UsageError("base_T needs n >= 0");
    std::lock_guard lk(g_base_mutex);
    auto it = g_base_memo.find(n);
    if (it != g_base_memo.end()) return it->second;
    std::string key = "baseT_n" + std::to_string(n);
    json j;
    MPoly p(0);
    if (disk_load(key, j)) {
        p = mpoly_from_json(j);
    } else {
        p = compute_base_T(n);
        disk_store(key, to_json(p));
    }
    return g_base_memo.emplace(n, std::move(p)).first->second;
}

// ---------------------------------------------------------------------------
// sigma-hat by interpolation

namespace {

constexpr int kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                           53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113};

// the bracket on the right side of the defining identity:
// x(x-2z-1)((z+2)x-3z) - a ((z+2)x-z)(2z+1-3x)
XPoly hs_bracket(const RatFun& a) {
    RatFun z = RatFun::zeta();
    XPoly X = XPoly::x();
    XPoly cubic = X * (X - XPoly(RatFun(2) * z + RatFun(1))) *
                  (X * (z + RatFun(2)) - XPoly(RatFun(3) * z));
    XPoly quad = (X * (z + RatFun(2)) - XPoly(z)) *
                 (XPoly(RatFun(2) * z + RatFun(1)) - X * RatFun(3));
    return cubic - quad * a;
}

XPoly hs_prefactor(const std::vector<Rat>& b) {
    XPoly f = XPoly::one();
    RatFun z = RatFun::zeta();
    RatFun zp2 = z + RatFun(2);
    RatFun mid = RatFun(-2) * (z * z + RatFun(3) * z + RatFun(1));
    RatFun lin = z * (RatFun(2) * z + RatFun(1));
    for (const Rat& bq : b) {
        RatFun bv{bq};
        f = f * XPoly::linear_root(bv);
        // G(x, b) by powers of x
        XPoly g(std::vector<RatFun>{-z * bv * bv + lin * bv, zp2 * bv * bv + mid * bv + lin,
                                    zp2 * bv - z});
        f = f * g;
    }
    return f;
}

std::map<int, SigmaOp> g_sigma_memo;
std::mutex g_sigma_mutex;

} // namespace

SigmaOp::SigmaOp(int n) : n_(n) {
    if (n < 1) throw UsageError("sigma-hat needs n >= 1");
    const int dim = 3 * n - 1;   // monomials x^0 .. x^{3n-2}
    const int rows_rhs = 3 * n + 1;

    struct Row {
        std::vector<RatFun> a;
        std::vector<RatFun> r;
    };
    std::vector<Row> rows;
    std::vector<std::pair<Rat, std::vector<Rat>>> tuples;

    auto add_sample = [&](int s) {
        const int period = sizeof(kPrimes) / sizeof(kPrimes[0]);
        Rat a = rat(kPrimes[(s * n) % period]);
        std::vector<Rat> b(n - 1);
        for (int j = 0; j < n - 1; ++j) b[j] = rat(kPrimes[(s * n + 1 + j) % period]);
        XPoly lhs = XPoly::linear_root(RatFun(a)) * hs_prefactor(b);
        XPoly rhs = hs_prefactor(b) * hs_bracket(RatFun(a));
        Row row;
        row.a.resize(dim);
        for (int t = 0; t < dim; ++t) row.a[t] = lhs.coeff(t);
        row.r.resize(rows_rhs);
        for (int t = 0; t < rows_rhs; ++t) row.r[t] = rhs.coeff(t);
        rows.push_back(std::move(row));
        tuples.emplace_back(a, b);
    };

    int samples = 0;
    for (; samples < dim + 2; ++samples) add_sample(samples);

    // Gauss-Jordan over Q(zeta); resample (bounded) while column rank is short
    std::vector<int> pivot_row(dim, -1);
    int rank = 0;
    const int max_samples = dim + 12;
    for (int col = 0; col < dim; ++col) {
        int found = -1;
        while (found < 0) {
            for (int i = rank; i < static_cast<int>(rows.size()); ++i)
                if (!rows[i].a[col].is_zero()) {
                    found = i;
                    break;
                }
            if (found < 0) {
                if (samples >= max_samples)
                    throw SingularInterpolation("sample family does not span degree " +
                                                std::to_string(3 * n - 2) + " for n=" +
                                                std::to_string(n));
                add_sample(samples++);
            }
        }
        std::swap(rows[rank], rows[found]);
        Row& p = rows[rank];
        RatFun inv = RatFun(1) / p.a[col];
        for (auto& v : p.a) v *= inv;
        for (auto& v : p.r) v *= inv;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == rank || rows[i].a[col].is_zero()) continue;
            RatFun f = rows[i].a[col];
            for (int t = 0; t < dim; ++t) rows[i].a[t] -= f * p.a[t];
            for (int t = 0; t < rows_rhs; ++t) rows[i].r[t] -= f * p.r[t];
        }
        pivot_row[col] = rank;
        ++rank;
    }

    // leftover rows must have vanished entirely, or the transcription is wrong
    for (int i = rank; i < static_cast<int>(rows.size()); ++i)
        for (const RatFun& v : rows[i].r)
            if (!v.is_zero())
                throw InconsistentSystem("defining identity rows are inconsistent at n=" +
                                         std::to_string(n));

    img_.resize(dim);
    for (int t = 0; t < dim; ++t) {
        std::vector<RatFun> c(rows_rhs);
        for (int s = 0; s < rows_rhs; ++s) c[s] = rows[pivot_row[t]].r[s];
        img_[t] = XPoly(std::move(c));
    }

    for (const auto& [a, b] : tuples)
        if (!check_sample(a, b))
            throw InconsistentSystem("solved operator fails a defining sample at n=" +
                                     std::to_string(n));
}

const SigmaOp& SigmaOp::get(int n) {
    std::lock_guard lk(g_sigma_mutex);
    auto it = g_sigma_memo.find(n);
    if (it == g_sigma_memo.end()) it = g_sigma_memo.emplace(n, SigmaOp(n)).first;
    return it->second;
}

XPoly SigmaOp::apply(const XPoly& p) const {
    if (p.degree() > domain_degree())
        throw Error(ErrKind::internal, "OperatorDomain",
                    "degree " + std::to_string(p.degree()) + " exceeds sigma-hat_" +
                        std::to_string(n_) + " domain");
    XPoly out;
    for (int t = 0; t <= p.degree(); ++t)
        if (!p.coeff(t).is_zero()) out += img_[t] * p.coeff(t);
    return out;
}

MPoly SigmaOp::apply_var(const MPoly& p, int var) const {
    if (p.degree_in(var) > domain_degree())
        throw Error(ErrKind::internal, "OperatorDomain",
                    "degree in x" + std::to_string(var + 1) + " exceeds sigma-hat_" +
                        std::to_string(n_) + " domain");
    MPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        const XPoly& im = img_[e[var]];
        Expo base = e;
        for (int d = 0; d <= im.degree(); ++d) {
            if (im.coeff(d).is_zero()) continue;
            base[var] = static_cast<uint16_t>(d);
            out.add_term(base, c * im.coeff(d));
        }
    }
    return out;
}

bool SigmaOp::check_sample(const Rat& a, const std::vector<Rat>& b) const {
    if (static_cast<int>(b.size()) != n_ - 1) throw UsageError("sample arity mismatch");
    XPoly lhs = XPoly::linear_root(RatFun(a)) * hs_prefactor(b);
    XPoly rhs = hs_prefactor(b) * hs_bracket(RatFun(a));
    return apply(lhs) == rhs;
}

// ---------------------------------------------------------------------------
// block function and the general T / U family

namespace {

std::map<std::pair<int, int>, MPoly> g_block_memo;
std::mutex g_block_mutex;

MPoly compute_block(int n, int split) {
    const int N = 2 * n;
    if (split == N) return base_T(n);
    MPoly A = MPoly::vandermonde(N) * base_T(n);
    const SigmaOp& op = SigmaOp::get(n);
    for (int v = split; v < N; ++v) A = op.apply_var(A, v);
    A = divide_vandermonde(std::move(A), 0, split);
    A = divide_vandermonde(std::move(A), split, N);
    return A;
}

} // namespace

const MPoly& block_poly(int n, int split) {
    if (n < 0 || split < 0 || split > 2 * n) throw UsageError("bad block parameters");
    std::lock_guard lk(g_block_mutex);
    auto key = std::make_pair(n, split);
    auto it = g_block_memo.find(key);
    if (it != g_block_memo.end()) return it->second;
    std::string dkey = "block_n" + std::to_string(n) + "_s" + std::to_string(split);
    json j;
    MPoly p(0);
    if (disk_load(dkey, j)) {
        p = mpoly_from_json(j);
    } else {
        p = compute_block(n, split);
        disk_store(dkey, to_json(p));
    }
    return g_block_memo.emplace(key, std::move(p)).first->second;
}

namespace {

// xi^{k} multiplicity list, in the paper's order (xi_0 ... xi_3)
std::vector<RatFun> xi_list(const std::array<int, 4>& mult) {
    std::vector<RatFun> v;
    for (int l = 0; l < 4; ++l)
        for (int c = 0; c < mult[l]; ++c) v.push_back(XiTable::get().xi[l]);
    return v;
}

RatFun g_cross_product(const std::array<int, 4>& km, const std::array<int, 4>& kp) {
    RatFun prod(1);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            long e = static_cast<long>(km[i]) * kp[j];
            if (e == 0) continue;
            RatFun g = g_scalar(i, j);
            if (g.is_zero())
                throw PoleAtSpecialization("G(xi_" + std::to_string(i) + ", xi_" +
                                           std::to_string(j) + ") vanishes identically");
            prod *= g.pow(e);
        }
    return prod;
}

XPoly den1_from(const std::array<int, 4>& mult) {
    XPoly d = XPoly::one();
    for (int l = 0; l < 4; ++l)
        for (int c = 0; c < mult[l]; ++c) d = d * g_at_xi(l);
    return d;
}

TFun assemble(const KIndex& idx, bool dual) {
    const auto kp = idx.kplus(), km = idx.kminus();
    const int m = idx.m;
    const int ntot = idx.n_tot();
    const int kps = idx.kplus_sum(), kms = idx.kminus_sum();

    TFun out;
    out.idx = idx;
    out.dual = dual;

    if (!dual && kms == 0) {
        // pure specialization of the base polynomial
        MPoly t = base_T(ntot);
        auto vals = xi_list(kp);
        for (int i = static_cast<int>(vals.size()) - 1; i >= 0; --i)
            t = t.specialize(m + i, vals[i]);
        out.num = std::move(t);
        out.den1 = XPoly::one();
        return out;
    }

    // id-block size and where the free variables sit
    const int split = dual ? kps : m + kps;
    const MPoly& W = block_poly(ntot, split);

    // positions to specialize, processed from the top down so indices stay valid
    std::vector<std::pair<int, RatFun>> subs;
    auto vp = xi_list(kp), vm = xi_list(km);
    if (!dual) {
        for (size_t i = 0; i < vp.size(); ++i) subs.emplace_back(m + static_cast<int>(i), vp[i]);
        for (size_t i = 0; i < vm.size(); ++i)
            subs.emplace_back(split + static_cast<int>(i), vm[i]);
    } else {
        for (size_t i = 0; i < vp.size(); ++i) subs.emplace_back(static_cast<int>(i), vp[i]);
        for (size_t i = 0; i < vm.size(); ++i)
            subs.emplace_back(split + m + static_cast<int>(i), vm[i]);
    }
    std::sort(subs.begin(), subs.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    MPoly t = W;
    for (const auto& [pos, val] : subs) t = t.specialize(pos, val);

    const int ksign = dual ? kps : kms;
    RatFun scale = RatFun(rat_pow(rat(2), ksign)) * g_cross_product(km, kp);
    if (binom2(ksign) % 2 != 0) scale = -scale;
    out.num = t * (RatFun(1) / scale);
    out.den1 = den1_from(dual ? kp : km);
    return out;
}

std::map<std::array<int, 4>, RatFun> g_tau_memo;
std::mutex g_tau_mutex;

} // namespace

MPoly TFun::den_expanded() const {
    MPoly d = MPoly::constant(num.nvars(), RatFun(1));
    for (int j = 0; j < num.nvars(); ++j) d = d * den1.to_mpoly(num.nvars(), j);
    return d;
}

MRat TFun::as_mrat() const { return MRat(num, den_expanded()); }

TFun general_T(const KIndex& k) { return assemble(k, false); }

TFun general_U(const KIndex& k) { return assemble(k, true); }

RatFun tau(const std::array<int, 4>& k) {
    {
        std::lock_guard lk(g_tau_mutex);
        auto it = g_tau_memo.find(k);
        if (it != g_tau_memo.end()) return it->second;
    }
    std::string key = "tau_" + std::to_string(k[0]) + "_" + std::to_string(k[1]) + "_" +
                      std::to_string(k[2]) + "_" + std::to_string(k[3]);
    json j;
    RatFun v;
    if (disk_load(key, j)) {
        v = ratfun_from_json(j);
    } else {
        TFun t = general_T(KIndex(k, 0));
        v = t.num.constant_term();
        disk_store(key, to_json(v));
    }
    std::lock_guard lk(g_tau_mutex);
    return g_tau_memo.emplace(k, v).first->second;
}

} // namespace symtau
