#pragma once

#include <string>
#include <vector>

#include "appell/poly.hpp"

namespace appell {

/// Triangular table of the coefficients a_i(N, v) of the linear ODE
/// satisfied by the variance-nu generating function: its N-th t-derivative
/// equals (sum_i a_i(N, v) (x - v t)^i) times the function itself.
///
/// Row N holds the N+1 entries a_0 .. a_N. Structure of every finished
/// table: a_N(N, v) = 1, entries with N - i odd vanish, and each nonzero
/// a_{N-2l}(N, v) is a single monomial (-1)^l * m * v^l with m a positive
/// integer.
class CoeffTable {
public:
    /// Builds rows 0 .. max_n by the row-to-row recurrence: a_0 picks up
    /// -v a_1 of the previous row, interior entries combine
    /// -(i+1) v a_{i+1} + a_{i-1}, and the top two entries shift down from
    /// the previous row's top.
    static CoeffTable build_recurrence(unsigned max_n);

    unsigned max_n() const { return static_cast<unsigned>(rows_.size()) - 1; }
    const std::vector<NuPoly>& row(unsigned n) const;
    /// Entry a_i(n, v); rejects i > n or n > max_n.
    const NuPoly& at(unsigned n, unsigned i) const;

    /// {"max_N": ..., "rows": [...]} with each entry encoded as a list of
    /// [nu_power, coeff_string] pairs, ascending in nu_power; zero entries
    /// encode as []. Deterministic output.
    std::string to_json() const;

private:
    CoeffTable() = default;

    std::vector<std::vector<NuPoly>> rows_;
};

/// a_{N-2l}(N, v) evaluated by the closed-form nested sums
///   (-v)^l  sum_{i_l=1}^{N-2l+1} sum_{i_{l-1}=1}^{i_l+1} ... sum_{i_1=1}^{i_2+1}  i_l i_{l-1} ... i_1,
/// computed by dynamic programming over prefix sums S_1(j) = sum_{i<=j} i,
/// S_r(j) = sum_{i<=j} i S_{r-1}(i+1); the nested sum equals S_l(N-2l+1).
/// The l = 0 case is the constant 1. Rejects 2l > N.
NuPoly closed_form_coefficient(unsigned n, unsigned l);

/// The vanishing entries a_{N-(2l-1)}(N, v) = 0. Accepts every l >= 1 whose
/// entry index N-(2l-1) lands in the triangle, i.e. 1 <= l <= ceil(N/2);
/// the top of that range (only reached for odd N) is the bottom entry
/// a_0(N, v). Together with closed_form_coefficient this makes the
/// closed-form route total over the whole triangle.
NuPoly odd_gap_zero(unsigned n, unsigned l);

/// (max_index+1) x (max_index+1) matrix view: entry (i, j) is a_i(j, v)
/// for i <= j and zero below the diagonal.
std::vector<std::vector<NuPoly>> coefficient_matrix(unsigned max_index);

/// {"max_index": ..., "matrix": [...]} with the same entry encoding as
/// CoeffTable::to_json().
std::string matrix_to_json(unsigned max_index);

}  // namespace appell
