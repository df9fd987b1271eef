#pragma once

#include "ahdet/rational.hpp"

#include <string>
#include <vector>

namespace ahdet {

/*
 * Staircase Young tableau of shape (n, n-1, ..., 1) with positive integer
 * entries. Row i (0-indexed) holds n - i entries. The constrained family
 * studied here additionally bounds each entry by the column differences of
 * the rows above; see satisfies_entry_bounds.
 */
class Tableau {
public:
    Tableau() = default;  // the empty tableau (n = 0)
    explicit Tableau(std::vector<std::vector<int>> rows);

    std::size_t size() const { return rows_.size(); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int entry(std::size_t i, std::size_t j) const { return rows_.at(i).at(j); }

    std::string to_string() const;

    friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows_ == b.rows_; }
    friend bool operator!=(const Tableau& a, const Tableau& b) { return a.rows_ != b.rows_; }
    friend bool operator<(const Tableau& a, const Tableau& b) { return a.rows_ < b.rows_; }

private:
    std::vector<std::vector<int>> rows_;
};

// Membership in the constrained family: every entry (i, j), 0-indexed,
// satisfies 1 <= entry <= p + sum_{k<i} (row_k[j+1] - row_k[j]).
bool satisfies_entry_bounds(const PrimeContext& ctx, const Tableau& t);

// All members of the family of staircase size n, row-major lexicographic
// order. Refuses to enumerate when the count p^{n(n+1)/2} exceeds 10^6.
std::vector<Tableau> enumerate_tableaux(const PrimeContext& ctx, long n);

// Truncation maps: drop the first (resp. last) entry of every row, shrinking
// staircase size n to n - 1.
Tableau truncate_first(const Tableau& t);
Tableau truncate_last(const Tableau& t);

// Gluing: prepend S's first column to T, then append u as a final one-cell
// row; takes two staircases of size n - 1 to one of size n.
Tableau glue(const Tableau& s, const Tableau& t, int u);

// A gluing triple; admissible when 1 <= u <= p + sum_k (T_k1 - S_k1).
struct AdmissibleTriple {
    Tableau s;
    Tableau t;
    int u = 1;
};

bool is_admissible(const PrimeContext& ctx, const Tableau& s, const Tableau& t, int u,
                   long n);

// Exhaustive count of admissible triples at size n; equals |T_{n-1}|^2 * p.
Int count_admissible(const PrimeContext& ctx, long n);

// Exhaustive check that gluing restricted to admissible triples (S, T, u)
// with truncate_first(S) == truncate_last(T) is a bijection onto the size-n
// family.
bool check_gluing_bijection(const PrimeContext& ctx, long n);

// Closed form for the family size: p^{n(n+1)/2}.
Int tableaux_count(const PrimeContext& ctx, long n);

}  // namespace ahdet
