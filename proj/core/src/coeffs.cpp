#include "appell/coeffs.hpp"

#include <json.hpp>

#include <stdexcept>

namespace appell {

CoeffTable CoeffTable::build_recurrence(unsigned max_n) {
    CoeffTable table;
    table.rows_.reserve(max_n + 1);
    table.rows_.push_back({NuPoly(1)});
    if (max_n >= 1) {
        table.rows_.push_back({NuPoly(0), NuPoly(1)});
    }
    for (unsigned n = 1; n < max_n; ++n) {
        const auto& prev = table.rows_[n];
        std::vector<NuPoly> next(n + 2);
        next[0] = -(prev[1].times_nu());
        for (unsigned i = 1; i + 1 <= n; ++i) {
            next[i] = -(prev[i + 1].times_nu() * Rational(static_cast<long>(i) + 1)) + prev[i - 1];
        }
        next[n] = prev[n - 1];
        next[n + 1] = prev[n];
        table.rows_.push_back(std::move(next));
    }
    return table;
}

const std::vector<NuPoly>& CoeffTable::row(unsigned n) const {
    if (n >= rows_.size()) {
        throw std::out_of_range("CoeffTable: row index exceeds max_n");
    }
    return rows_[n];
}

const NuPoly& CoeffTable::at(unsigned n, unsigned i) const {
    const auto& r = row(n);
    if (i >= r.size()) {
        throw std::out_of_range("CoeffTable: entry index exceeds the row length");
    }
    return r[i];
}

namespace {

nlohmann::ordered_json entry_json(const NuPoly& p) {
    auto entry = nlohmann::ordered_json::array();
    for (const auto& [deg, c] : p.coeffs()) {
        entry.push_back(nlohmann::ordered_json::array({deg, c.str()}));
    }
    return entry;
}

}  // namespace

std::string CoeffTable::to_json() const {
    nlohmann::ordered_json j;
    j["max_N"] = max_n();
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : rows_) {
        auto row_json = nlohmann::ordered_json::array();
        for (const auto& entry : row) {
            row_json.push_back(entry_json(entry));
        }
        rows.push_back(std::move(row_json));
    }
    j["rows"] = std::move(rows);
    return j.dump();
}

NuPoly closed_form_coefficient(unsigned n, unsigned l) {
    if (2 * l > n) {
        throw std::invalid_argument("closed_form_coefficient: 2l exceeds N");
    }
    if (l == 0) {
        return NuPoly(1);
    }
    // S_r(j) tabulated for j = 0 .. len-1. Level r is valid for
    // j <= len-r; the argument needed at level r is N-2l+1 + (l-r),
    // which stays within the valid prefix.
    const size_t len = n + 3;
    std::vector<Integer> level(len), next(len);
    for (size_t j = 1; j < len; ++j) {
        level[j] = level[j - 1] + Integer(j);
    }
    for (unsigned r = 2; r <= l; ++r) {
        next.assign(len, Integer(0));
        for (size_t j = 1; j + 1 < len; ++j) {
            next[j] = next[j - 1] + Integer(j) * level[j + 1];
        }
        level.swap(next);
    }
    Integer magnitude = level[n - 2 * l + 1];
    if (l % 2 == 1) {
        magnitude = -magnitude;
    }
    return NuPoly::term(Rational(magnitude), l);
}

NuPoly odd_gap_zero(unsigned n, unsigned l) {
    if (l < 1 || 2 * l > n + 1) {
        throw std::invalid_argument("odd_gap_zero: entry index N-(2l-1) out of the triangle");
    }
    return NuPoly();
}

std::vector<std::vector<NuPoly>> coefficient_matrix(unsigned max_index) {
    const CoeffTable table = CoeffTable::build_recurrence(max_index);
    std::vector<std::vector<NuPoly>> matrix(max_index + 1, std::vector<NuPoly>(max_index + 1));
    for (unsigned j = 0; j <= max_index; ++j) {
        for (unsigned i = 0; i <= j; ++i) {
            matrix[i][j] = table.at(j, i);
        }
    }
    return matrix;
}

std::string matrix_to_json(unsigned max_index) {
    const auto matrix = coefficient_matrix(max_index);
    nlohmann::ordered_json j;
    j["max_index"] = max_index;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : matrix) {
        auto row_json = nlohmann::ordered_json::array();
        for (const auto& entry : row) {
            row_json.push_back(entry_json(entry));
        }
        rows.push_back(std::move(row_json));
    }
    j["matrix"] = std::move(rows);
    return j.dump();
}

}  // namespace appell
