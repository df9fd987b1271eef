#include "ahdet/tableaux.hpp"

#include <functional>
#include <set>

namespace ahdet {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    const std::size_t n = rows_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (rows_[i].size() != n - i)
            throw std::invalid_argument("tableau is not staircase shaped");
        for (int v : rows_[i])
            if (v < 1)
                throw std::invalid_argument("tableau entries must be positive");
    }
}

std::string Tableau::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i)
            s += "; ";
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (j)
                s += " ";
            s += std::to_string(rows_[i][j]);
        }
    }
    return s + "]";
}

namespace {

// Upper bound for cell (i, j), 0-indexed; depends only on rows above i.
long entry_bound(const PrimeContext& ctx, const std::vector<std::vector<int>>& rows,
                 std::size_t i, std::size_t j) {
    long b = ctx.p();
    for (std::size_t k = 0; k < i; ++k)
        b += rows[k][j + 1] - rows[k][j];
    return b;
}

}  // namespace

bool satisfies_entry_bounds(const PrimeContext& ctx, const Tableau& t) {
    const auto& rows = t.rows();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            const int v = rows[i][j];
            if (v < 1 || v > entry_bound(ctx, rows, i, j))
                return false;
        }
    return true;
}

Int tableaux_count(const PrimeContext& ctx, long n) {
    if (n < 0)
        throw std::invalid_argument("staircase size must be nonnegative");
    return int_pow(ctx.p(), n * (n + 1) / 2);
}

namespace {

constexpr long kEnumerationLimit = 1000000;

void require_enumerable(const PrimeContext& ctx, long n) {
    if (n < 0)
        throw std::invalid_argument("staircase size must be nonnegative");
    if (tableaux_count(ctx, n) > kEnumerationLimit)
        throw std::invalid_argument("tableaux enumeration guard exceeded (p^{n(n+1)/2} > 10^6)");
}

}  // namespace

std::vector<Tableau> enumerate_tableaux(const PrimeContext& ctx, long n) {
    require_enumerable(ctx, n);
    std::vector<Tableau> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    const std::size_t un = static_cast<std::size_t>(n);
    std::vector<std::vector<int>> rows(un);
    for (std::size_t i = 0; i < un; ++i)
        rows[i].resize(un - i);

    // Row-major fill; the bound for a cell only looks at completed rows.
    const std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t i,
                                                                   std::size_t j) {
        if (i == un) {
            out.push_back(Tableau(rows));
            return;
        }
        const std::size_t next_i = (j + 1 == rows[i].size()) ? i + 1 : i;
        const std::size_t next_j = (j + 1 == rows[i].size()) ? 0 : j + 1;
        const long bound = entry_bound(ctx, rows, i, j);
        for (long v = 1; v <= bound; ++v) {
            rows[i][j] = static_cast<int>(v);
            fill(next_i, next_j);
        }
    };
    fill(0, 0);
    return out;
}

Tableau truncate_first(const Tableau& t) {
    if (t.size() == 0)
        throw std::invalid_argument("cannot truncate the empty tableau");
    std::vector<std::vector<int>> rows;
    rows.reserve(t.size() - 1);
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
        rows.emplace_back(t.rows()[i].begin() + 1, t.rows()[i].end());
    return Tableau(std::move(rows));
}

Tableau truncate_last(const Tableau& t) {
    if (t.size() == 0)
        throw std::invalid_argument("cannot truncate the empty tableau");
    std::vector<std::vector<int>> rows;
    rows.reserve(t.size() - 1);
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
        rows.emplace_back(t.rows()[i].begin(), t.rows()[i].end() - 1);
    return Tableau(std::move(rows));
}

Tableau glue(const Tableau& s, const Tableau& t, int u) {
    if (s.size() != t.size())
        throw std::invalid_argument("gluing requires tableaux of equal staircase size");
    if (u < 1)
        throw std::invalid_argument("glued entry must be positive");
    std::vector<std::vector<int>> rows;
    rows.reserve(s.size() + 1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<int> row;
        row.reserve(t.rows()[i].size() + 1);
        row.push_back(s.entry(i, 0));
        row.insert(row.end(), t.rows()[i].begin(), t.rows()[i].end());
        rows.push_back(std::move(row));
    }
    rows.push_back({u});
    return Tableau(std::move(rows));
}

namespace {

long admissible_bound(const PrimeContext& ctx, const Tableau& s, const Tableau& t) {
    long b = ctx.p();
    for (std::size_t k = 0; k < s.size(); ++k)
        b += t.entry(k, 0) - s.entry(k, 0);
    return b;
}

}  // namespace

bool is_admissible(const PrimeContext& ctx, const Tableau& s, const Tableau& t, int u,
                   long n) {
    if (n < 1)
        throw std::invalid_argument("admissibility is defined for n >= 1");
    const std::size_t expected = static_cast<std::size_t>(n - 1);
    if (s.size() != expected || t.size() != expected)
        throw std::invalid_argument("triple components must have staircase size n - 1");
    if (!satisfies_entry_bounds(ctx, s) || !satisfies_entry_bounds(ctx, t))
        throw std::invalid_argument("triple components must belong to the size n - 1 family");
    return u >= 1 && u <= admissible_bound(ctx, s, t);
}

Int count_admissible(const PrimeContext& ctx, long n) {
    if (n < 1)
        throw std::invalid_argument("admissible triples are defined for n >= 1");
    const auto members = enumerate_tableaux(ctx, n - 1);
    Int total = 0;
    for (const Tableau& s : members)
        for (const Tableau& t : members) {
            const long bound = admissible_bound(ctx, s, t);
            if (bound > 0)
                total += bound;
        }
    return total;
}

bool check_gluing_bijection(const PrimeContext& ctx, long n) {
    if (n < 1)
        throw std::invalid_argument("gluing bijection is defined for n >= 1");
    require_enumerable(ctx, n);
    const auto members = enumerate_tableaux(ctx, n);
    const std::set<Tableau> expected(members.begin(), members.end());
    const auto sources = enumerate_tableaux(ctx, n - 1);

    std::set<Tableau> glued;
    for (const Tableau& s : sources)
        for (const Tableau& t : sources) {
            if (n > 1 && truncate_first(s) != truncate_last(t))
                continue;
            const long bound = admissible_bound(ctx, s, t);
            for (long u = 1; u <= bound; ++u) {
                const Tableau p = glue(s, t, static_cast<int>(u));
                if (!satisfies_entry_bounds(ctx, p))
                    return false;  // image escaped the family
                if (!glued.insert(p).second)
                    return false;  // not injective
            }
        }
    return glued == expected;
}

}  // namespace ahdet
