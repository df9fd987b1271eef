#include "ahdet/perm.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace ahdet {

CycleType::CycleType(std::vector<long> p) : parts(std::move(p)) {
    for (long part : parts)
        if (part < 2)
            throw std::invalid_argument("cycle type parts must be >= 2 (no fixed points)");
    std::sort(parts.begin(), parts.end(), std::greater<long>());
}

long CycleType::length() const {
    return std::accumulate(parts.begin(), parts.end(), 0L);
}

std::string CycleType::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

bool is_p_power_type(const CycleType& t, const PrimeContext& ctx) {
    for (long part : t.parts) {
        if (part < ctx.p())
            return false;
        while (part % ctx.p() == 0)
            part /= ctx.p();
        if (part != 1)
            return false;
    }
    return true;
}

std::vector<CycleType> cycle_types_with_length(const PrimeContext& ctx, long k) {
    if (k < 0)
        throw std::invalid_argument("cycle type length index must be nonnegative");
    const long target = ctx.p() * k;
    std::vector<long> powers;  // descending
    for (long q = ctx.p(); q <= target; q *= ctx.p())
        powers.push_back(q);
    std::reverse(powers.begin(), powers.end());

    std::vector<CycleType> out;
    std::vector<long> current;
    const std::function<void(long, long)> extend = [&](long remaining, long max_part) {
        if (remaining == 0) {
            out.push_back(CycleType(current));
            return;
        }
        for (long q : powers) {
            if (q > max_part || q > remaining)
                continue;
            current.push_back(q);
            extend(remaining - q, q);
            current.pop_back();
        }
    };
    extend(target, target);
    return out;
}

std::vector<CycleType> cycle_types_in_sn(const PrimeContext& ctx, long n) {
    if (n < 0)
        throw std::invalid_argument("symmetric group degree must be nonnegative");
    std::vector<CycleType> out;
    for (long k = 1; k <= n / ctx.p(); ++k) {
        auto types = cycle_types_with_length(ctx, k);
        out.insert(out.end(), types.begin(), types.end());
    }
    return out;
}

Int count_with_cycle_type(long n, const CycleType& t) {
    const long moved = t.length();
    if (n < 0 || moved > n)
        throw std::invalid_argument("cycle type does not fit in S_n");
    Int denom = factorial(n - moved);
    std::size_t i = 0;
    while (i < t.parts.size()) {
        std::size_t j = i;
        while (j < t.parts.size() && t.parts[j] == t.parts[i])
            ++j;
        const long multiplicity = static_cast<long>(j - i);
        denom *= int_pow(t.parts[i], multiplicity) * factorial(multiplicity);
        i = j;
    }
    Int result;
    const Int num = factorial(n);
    mpz_divexact(result.get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());
    return result;
}

Int fixed_point_free_count(const PrimeContext& ctx, long k) {
    Int total = 0;
    for (const CycleType& t : cycle_types_with_length(ctx, k))
        total += count_with_cycle_type(ctx.p() * k, t);
    return total;
}

Int p_element_count_by_types(const PrimeContext& ctx, long n) {
    if (n < 0)
        throw std::invalid_argument("symmetric group degree must be nonnegative");
    Int total = 0;
    for (long k = 0; k <= n / ctx.p(); ++k)
        total += binomial(n, k * ctx.p()) * fixed_point_free_count(ctx, k);
    return total;
}

namespace {

constexpr long kBruteforceLimit = 9;

// Calls visit(cycle_lengths) for every permutation of {0..n-1}.
template <typename Visit>
void for_each_cycle_structure(long n, Visit visit) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<long> lengths;
    std::vector<bool> seen(perm.size());
    do {
        lengths.clear();
        std::fill(seen.begin(), seen.end(), false);
        for (std::size_t start = 0; start < perm.size(); ++start) {
            if (seen[start])
                continue;
            long len = 0;
            std::size_t pos = start;
            while (!seen[pos]) {
                seen[pos] = true;
                pos = static_cast<std::size_t>(perm[pos]);
                ++len;
            }
            lengths.push_back(len);
        }
        visit(lengths);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

Int p_element_count_bruteforce(const PrimeContext& ctx, long n) {
    if (n < 0)
        throw std::invalid_argument("symmetric group degree must be nonnegative");
    if (n > kBruteforceLimit)
        throw std::invalid_argument("bruteforce enumeration bounded at n <= 9");
    long count = 0;
    for_each_cycle_structure(n, [&](const std::vector<long>& lengths) {
        for (long len : lengths) {
            while (len % ctx.p() == 0)
                len /= ctx.p();
            if (len != 1)
                return;
        }
        ++count;
    });
    return Int(count);
}

Int count_with_cycle_type_bruteforce(long n, const CycleType& t) {
    if (n < 0 || t.length() > n)
        throw std::invalid_argument("cycle type does not fit in S_n");
    if (n > kBruteforceLimit)
        throw std::invalid_argument("bruteforce enumeration bounded at n <= 9");
    long count = 0;
    std::vector<long> nontrivial;
    for_each_cycle_structure(n, [&](const std::vector<long>& lengths) {
        nontrivial.clear();
        for (long len : lengths)
            if (len > 1)
                nontrivial.push_back(len);
        std::sort(nontrivial.begin(), nontrivial.end(), std::greater<long>());
        if (nontrivial == t.parts)
            ++count;
    });
    return Int(count);
}

namespace {

void require_verifiable_type(const PrimeContext& ctx, const CycleType& t) {
    if (t.empty())
        throw std::invalid_argument("cycle type must be nonempty");
    if (!is_p_power_type(t, ctx))
        throw std::invalid_argument("cycle type parts must be powers of p");
}

}  // namespace

bool check_count_recursion(const PrimeContext& ctx, long n, const CycleType& t) {
    require_verifiable_type(ctx, t);
    if (n <= t.length())
        throw std::invalid_argument("recursion check requires n > |t|");
    return (n - t.length()) * count_with_cycle_type(n, t) ==
           n * count_with_cycle_type(n - 1, t);
}

bool check_count_binomial(const PrimeContext& ctx, long n, const CycleType& t) {
    require_verifiable_type(ctx, t);
    if (n < t.length())
        throw std::invalid_argument("binomial check requires n >= |t|");
    return count_with_cycle_type(n, t) ==
           binomial(n, t.length()) * count_with_cycle_type(t.length(), t);
}

}  // namespace ahdet
