#include "partitions/count.hpp"

#include <algorithm>

#include "partitions/enumerate.hpp"

namespace partitions {

namespace {

std::string u128_to_string(unsigned __int128 v)
{
    if (v == 0)
        return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

// Re-raises an overflow with the argument being counted attached.
template <typename F>
auto with_n(std::int64_t n, F && f)
{
    try {
        return f();
    } catch (OverflowError const & e) {
        if (e.n() >= 0)
            throw;
        throw OverflowError(std::string(e.what()) + " at n=" + std::to_string(n), n);
    }
}

} // namespace

Count & Count::operator+=(Count o)
{
    if (__builtin_add_overflow(value_, o.value_, &value_))
        throw OverflowError("count addition overflow");
    return *this;
}

Count & Count::operator-=(Count o)
{
    if (__builtin_sub_overflow(value_, o.value_, &value_))
        throw OverflowError("count subtraction went negative");
    return *this;
}

Count & Count::operator*=(Count o)
{
    if (__builtin_mul_overflow(value_, o.value_, &value_))
        throw OverflowError("count multiplication overflow");
    return *this;
}

std::string Count::to_string() const { return u128_to_string(value_); }

SignedCount::SignedCount(Count c)
{
    if (c.raw() > static_cast<unsigned __int128>(~static_cast<unsigned __int128>(0) >> 1))
        throw OverflowError("count does not fit a signed 128-bit value");
    value_ = static_cast<__int128>(c.raw());
}

SignedCount & SignedCount::operator+=(SignedCount o)
{
    if (__builtin_add_overflow(value_, o.value_, &value_))
        throw OverflowError("signed count addition overflow");
    return *this;
}

SignedCount & SignedCount::operator-=(SignedCount o)
{
    if (__builtin_sub_overflow(value_, o.value_, &value_))
        throw OverflowError("signed count subtraction overflow");
    return *this;
}

SignedCount SignedCount::operator-() const { return SignedCount{} - *this; }

Count SignedCount::to_count() const
{
    if (value_ < 0)
        throw OverflowError("negative value where a count was expected: " + to_string());
    return Count::from_raw(static_cast<unsigned __int128>(value_));
}

std::string SignedCount::to_string() const
{
    if (value_ >= 0)
        return u128_to_string(static_cast<unsigned __int128>(value_));
    return "-" + u128_to_string(static_cast<unsigned __int128>(0) - static_cast<unsigned __int128>(value_));
}

std::string to_csv(CountRow const & r)
{
    std::string s = std::to_string(r.n);
    for (auto const * v : {&r.distinct, &r.a, &r.bo, &r.be}) {
        s += ',';
        s += v->to_string();
    }
    s += ',' + r.b.to_string();
    s += ',' + r.co.to_string();
    s += ',' + r.ce.to_string();
    s += ',' + r.c.to_string();
    s += ',' + r.bo_prime.to_string();
    s += ',' + r.be_prime.to_string();
    return s;
}

CountEngine::CountEngine(std::uint32_t n_max)
    : n_max_(n_max)
    , distinct_(std::size_t(n_max) + 1, Count{})
{
    distinct_[0] = 1;
    // each part p used at most once; descending j keeps it 0/1
    for (std::uint32_t p = 1; p <= n_max_; ++p) {
        for (std::uint32_t j = n_max_; j >= p; --j) {
            try {
                distinct_[j] += distinct_[j - p];
            } catch (OverflowError const &) {
                throw OverflowError("N(n) overflows 128 bits at n=" + std::to_string(j), j);
            }
        }
    }
}

void CountEngine::check_range(std::int64_t n) const
{
    if (n > std::int64_t(n_max_))
        throw std::out_of_range("n=" + std::to_string(n) + " exceeds the count table limit " + std::to_string(n_max_));
}

Count CountEngine::distinct(std::int64_t n) const
{
    if (n < 0)
        return 0;
    check_range(n);
    return distinct_[static_cast<std::size_t>(n)];
}

Count CountEngine::distinct_avoiding(std::int64_t n, std::uint32_t m, AvoidMethod method) const
{
    if (m == 0)
        throw std::invalid_argument("avoided part must be at least 1");
    if (n < 0)
        return 0;
    check_range(n);

    return with_n(n, [&] {
        if (method == AvoidMethod::recurrence) {
            // N_m(x) = N(x) - N_m(x - m), started from the smallest x >= 0 in n's residue class
            Count prev = 0;
            for (std::int64_t x = n % m; x <= n; x += m)
                prev = distinct(x) - prev;
            return prev;
        }
        SignedCount sum;
        for (std::int64_t i = 0; n - i * m >= 0; ++i) {
            SignedCount term(distinct(n - i * m));
            sum += (i % 2 == 0) ? term : -term;
        }
        return sum.to_count();
    });
}

SignedCount CountEngine::formula(std::int64_t n, FormulaCounter which) const
{
    if (n < 0)
        return 0;
    check_range(n);

    return with_n(n, [&] {
        SignedCount sum;
        switch (which) {
        case FormulaCounter::bo_prime:
            // even part 2k with odd multiplicity 2s-1, odd remainder counted via N
            for (std::int64_t odd = 1; odd * 2 <= n; odd += 2)
                for (std::int64_t even = 2; odd * even <= n; even += 2)
                    sum += SignedCount(distinct(n - odd * even));
            break;
        case FormulaCounter::be_prime:
            for (std::int64_t mult = 2; mult * 2 <= n; mult += 2)
                for (std::int64_t even = 2; mult * even <= n; even += 2)
                    sum += SignedCount(distinct(n - mult * even));
            break;
        case FormulaCounter::co:
        case FormulaCounter::ce:
            // repeated part r (odd or even) taken t >= 2 times, rest distinct avoiding r
            for (std::int64_t r = which == FormulaCounter::co ? 1 : 2; 2 * r <= n; r += 2)
                for (std::int64_t t = 2; t * r <= n; ++t)
                    sum += SignedCount(distinct_avoiding(n - t * r, static_cast<std::uint32_t>(r)));
            break;
        case FormulaCounter::b_prime:
            for (std::int64_t t = 1; 2 * t <= n; ++t) {
                for (std::int64_t even = 2; t * even <= n; even += 2) {
                    SignedCount term(distinct(n - t * even));
                    sum += (t % 2 == 1) ? term : -term;
                }
            }
            break;
        }
        return sum;
    });
}

Count CountEngine::even_parts(std::int64_t n) const
{
    if (n < 0)
        return 0;
    check_range(n);
    return with_n(n, [&] {
        Count sum;
        for (std::int64_t even = 2; even <= n; even += 2)
            sum += distinct_avoiding(n - even, static_cast<std::uint32_t>(even));
        return sum;
    });
}

CountRow CountEngine::row(std::uint32_t n) const
{
    CountRow r;
    r.n = n;
    r.distinct = distinct(n);
    r.a = even_parts(n);
    r.bo_prime = formula(n, FormulaCounter::bo_prime).to_count();
    r.be_prime = formula(n, FormulaCounter::be_prime).to_count();
    r.co = formula(n, FormulaCounter::co).to_count();
    r.ce = formula(n, FormulaCounter::ce).to_count();
    bool even_n = n % 2 == 0;
    r.bo = even_n ? r.bo_prime : r.be_prime;
    r.be = even_n ? r.be_prime : r.bo_prime;
    with_n(n, [&] {
        r.b = SignedCount(r.bo) - SignedCount(r.be);
        r.c = SignedCount(r.co) - SignedCount(r.ce);
        return 0;
    });
    return r;
}

Count count_distinct(std::int64_t n)
{
    if (n < 0)
        return 0;
    return CountEngine(static_cast<std::uint32_t>(n)).distinct(n);
}

Count count_distinct_avoiding(std::int64_t n, std::uint32_t m, AvoidMethod method)
{
    return CountEngine(static_cast<std::uint32_t>(std::max<std::int64_t>(n, 0))).distinct_avoiding(n, m, method);
}

SignedCount count_class_by_formula(std::int64_t n, FormulaCounter which)
{
    return CountEngine(static_cast<std::uint32_t>(std::max<std::int64_t>(n, 0))).formula(n, which);
}

namespace {

void check_budget(std::uint32_t n, std::uint32_t budget)
{
    if (n > budget)
        throw BudgetError("n=" + std::to_string(n) + " exceeds the enumeration budget " + std::to_string(budget));
}

} // namespace

Count count_class_by_enumeration(std::uint32_t n, PartitionClass c, std::uint32_t budget)
{
    check_budget(n, budget);
    PartitionStream s(EnumerationQuery{n, c, std::nullopt});
    return s.for_each([](Partition const &) {});
}

Count count_even_parts(std::uint32_t n, EvenPartsMethod method, std::uint32_t budget)
{
    if (method == EvenPartsMethod::formula)
        return CountEngine(n).even_parts(n);
    check_budget(n, budget);
    WitnessStream s(n);
    Count total;
    while (s.next())
        total += 1;
    return total;
}

CountRow enumerated_row(std::uint32_t n, std::uint32_t budget)
{
    check_budget(n, budget);
    CountRow r;
    r.n = n;
    PartitionStream s(EnumerationQuery{n, std::nullopt, std::nullopt});
    s.for_each([&](Partition const & p) {
        auto cls = classify(p);
        auto bump = [&](PartitionClass c, Count & slot) {
            if (cls.contains(c))
                slot += 1;
        };
        bump(PartitionClass::distinct, r.distinct);
        bump(PartitionClass::bo, r.bo);
        bump(PartitionClass::be, r.be);
        bump(PartitionClass::co, r.co);
        bump(PartitionClass::ce, r.ce);
        bump(PartitionClass::bo_prime, r.bo_prime);
        bump(PartitionClass::be_prime, r.be_prime);
    });
    r.a = count_even_parts(n, EvenPartsMethod::enumeration, budget);
    r.b = SignedCount(r.bo) - SignedCount(r.be);
    r.c = SignedCount(r.co) - SignedCount(r.ce);
    return r;
}

std::vector<CountRow> count_table(std::uint32_t n_from, std::uint32_t n_to)
{
    std::vector<CountRow> rows;
    if (n_from > n_to)
        return rows;
    CountEngine engine(n_to);
    rows.reserve(n_to - n_from + 1);
    for (std::uint32_t n = n_from; n <= n_to; ++n)
        rows.push_back(engine.row(n));
    return rows;
}

} // namespace partitions
