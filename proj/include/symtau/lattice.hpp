#pragma once

#include "symtau/pde.hpp"

namespace symtau {

// The quadratic-in-k forms entering the two bilinear identities. Transcribed
// as explicit coefficient tables; each displayed line has a unit test.
RatFun quad_A(const std::array<int, 4>& k);
RatFun quad_B(const std::array<int, 4>& k);

// Left minus right side of identity (a) or (b) at lattice point k (|k| even),
// with every tau computed from the determinant pipeline and d/dzeta exact.
RatFun bilinear_residual(char which, const std::array<int, 4>& k);

// The specialized-derivative formula: dT/dx at xi_0 expressed through
// t^{(k+e_0)} and its zeta-derivative. For m > 1 the index is first pushed to
// the m = 1 case by specializing the extra variables at xi_0.
bool bst_check(const KIndex& k);

struct LatticeRow {
    std::array<int, 4> k{};
    int norm2 = 0; // twice sum |k_j + 1/2|
    RatFun t;
    bool nonzero = false;
    // 'p' pass, 'f' fail, 's' skipped (participants outside window)
    char id_a = 's';
    char id_b = 's';
};

struct LatticeReport {
    int window = 0;
    std::vector<LatticeRow> rows; // ordered by norm2, then lexicographic k
    int checked = 0;
    int failed = 0;
    bool all_nonzero = true;
};

LatticeReport lattice_verify(int window, int jobs);

} // namespace symtau
