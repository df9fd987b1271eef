#pragma once

#include "ahdet/rational.hpp"

#include <string>
#include <vector>

namespace ahdet {

/*
 * Cycle type of a p-element of a symmetric group: the multiset of its cycle
 * lengths, fixed points omitted. Canonical form is sorted descending. The
 * empty type stands for the identity.
 */
struct CycleType {
    std::vector<long> parts;

    CycleType() = default;
    explicit CycleType(std::vector<long> p);

    long length() const;  // sum of parts (number of moved points)
    bool empty() const { return parts.empty(); }
    std::string to_string() const;

    friend bool operator==(const CycleType& a, const CycleType& b) {
        return a.parts == b.parts;
    }
    friend bool operator<(const CycleType& a, const CycleType& b) {
        return a.parts < b.parts;
    }
};

bool is_p_power_type(const CycleType& t, const PrimeContext& ctx);

// All cycle types with parts that are powers of p (each >= p) of total
// length p*k; k = 0 yields just the empty type.
std::vector<CycleType> cycle_types_with_length(const PrimeContext& ctx, long k);

// All nonempty p-power cycle types fitting in S_n.
std::vector<CycleType> cycle_types_in_sn(const PrimeContext& ctx, long n);

// Number of permutations in S_n whose nontrivial cycles form exactly the
// multiset t: n! / ((n - |t|)! * prod_c c^{m_c} m_c!).
Int count_with_cycle_type(long n, const CycleType& t);

// Number of fixed-point-free p-elements of S_{pk} (the cycle types of total
// length pk, summed over their counts).
Int fixed_point_free_count(const PrimeContext& ctx, long k);

// p-element count of S_n via the binomial expansion over cycle types:
// sum_k binom(n, kp) * fixed_point_free_count(k).
Int p_element_count_by_types(const PrimeContext& ctx, long n);

// Independent oracle: enumerate all n! permutations and count those whose
// order is a power of p. Guarded at n <= 9.
Int p_element_count_bruteforce(const PrimeContext& ctx, long n);

// Oracle sibling: count permutations of S_n with exact cycle type t by
// enumeration. Guarded at n <= 9.
Int count_with_cycle_type_bruteforce(long n, const CycleType& t);

// Extensional checks of the count identities, via count_with_cycle_type:
//   (n - |t|) * C_t^n == n * C_t^{n-1}        (requires n > |t|, t nonempty)
//   C_t^n == binom(n, |t|) * C_t^{|t|}        (requires n >= |t|, t nonempty)
bool check_count_recursion(const PrimeContext& ctx, long n, const CycleType& t);
bool check_count_binomial(const PrimeContext& ctx, long n, const CycleType& t);

}  // namespace ahdet
