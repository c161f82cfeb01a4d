#include "partitions/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include <json.hpp>

#include "partitions/enumerate.hpp"

namespace partitions {

namespace {

using Clock = std::chrono::steady_clock;
using Failure = std::optional<Counterexample>;

Counterexample failure(std::int64_t n, std::string detail, std::vector<std::string> partitions = {})
{
    return Counterexample{n, std::move(detail), std::move(partitions)};
}

// Runs check(n) for n in [lo, hi] on a small worker pool and returns the
// failure with the smallest n, so the result does not depend on scheduling.
template <typename F>
Failure first_failure(std::uint32_t lo, std::uint32_t hi, unsigned threads, F const & check)
{
    if (lo > hi)
        return std::nullopt;
    std::size_t count = std::size_t(hi) - lo + 1;
    std::vector<Failure> results(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            std::int64_t n = lo + std::int64_t(i);
            try {
                results[i] = check(static_cast<std::uint32_t>(n));
            } catch (std::exception const & e) {
                results[i] = failure(n, std::string("exception: ") + e.what());
            }
        }
    };

    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    for (auto & r : results)
        if (r)
            return std::move(r);
    return std::nullopt;
}

VerificationReport finish(std::string check, std::uint32_t lo, std::uint32_t hi, Failure f, Clock::time_point start)
{
    VerificationReport r;
    r.check = std::move(check);
    r.n_min = lo;
    r.n_max = hi;
    r.passed = !f.has_value();
    r.counterexample = std::move(f);
    r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
    return r;
}

std::string counts_detail(CountRow const & r, Pipeline p)
{
    return std::string(p == Pipeline::formula ? "formula" : "enumeration") + " counts: " + count_csv_header + " = "
           + to_csv(r);
}

CountRow tampered(CountRow row, Pipeline p, VerifyOptions const & opts)
{
    if (opts.tamper.row)
        opts.tamper.row(row, p);
    return row;
}

std::uint32_t enumeration_limit(std::uint32_t n_max, VerifyOptions const & opts)
{
    return std::min(n_max, opts.enumeration_budget);
}

Failure check_even_part_identity(CountRow const & r, Pipeline p)
{
    auto a = SignedCount(r.a);
    auto signed_b = r.n % 2 == 0 ? r.b : -r.b;
    if (r.b != SignedCount(r.bo) - SignedCount(r.be) || r.c != SignedCount(r.co) - SignedCount(r.ce))
        return failure(r.n, "b(n) or c(n) disagrees with its class counts; " + counts_detail(r, p));
    if (a != signed_b || a != r.c)
        return failure(r.n, "a(n) = (-1)^n b(n) = c(n) fails; " + counts_detail(r, p));
    return std::nullopt;
}

Failure check_parity_split(CountRow const & r, Pipeline p)
{
    bool ok = r.n % 2 == 0 ? (r.bo == r.co && r.be == r.ce) : (r.bo == r.ce && r.be == r.co);
    if (!ok)
        return failure(r.n, "parity split of b_o/b_e against c_o/c_e fails; " + counts_detail(r, p));
    return std::nullopt;
}

// Runs `check` over formula rows 1..n_max and enumerated rows up to the budget.
template <typename F>
Failure over_both_pipelines(std::uint32_t n_max, VerifyOptions const & opts, F const & check)
{
    if (n_max == 0)
        return std::nullopt;
    CountEngine engine(n_max);
    for (std::uint32_t n = 1; n <= n_max; ++n)
        if (auto f = check(tampered(engine.row(n), Pipeline::formula, opts), Pipeline::formula))
            return f;

    return first_failure(1, enumeration_limit(n_max, opts), opts.threads, [&](std::uint32_t n) -> Failure {
        auto row = tampered(enumerated_row(n, opts.enumeration_budget), Pipeline::enumeration, opts);
        if (auto f = check(row, Pipeline::enumeration))
            return f;
        auto formula = tampered(engine.row(n), Pipeline::formula, opts);
        if (row.a != formula.a)
            return failure(n, "a(n) differs between pipelines: enumeration " + row.a.to_string() + ", formula "
                                  + formula.a.to_string());
        return std::nullopt;
    });
}

std::vector<std::string> texts(std::initializer_list<ThetaTwoImage> items)
{
    std::vector<std::string> out;
    for (auto const & i : items)
        out.push_back(to_text(i));
    return out;
}

struct BijectionPlan {
    MapId forward_id;
    std::function<std::vector<Partition>(std::uint32_t)> domain;
    std::function<std::vector<ThetaTwoImage>(std::uint32_t)> codomain;
    std::function<ThetaTwoImage(Partition const &)> forward;
    std::function<Partition(ThetaTwoImage const &)> inverse;
};

std::vector<Partition> of_class(std::uint32_t n, PartitionClass c)
{
    return enumerate_partitions(EnumerationQuery{n, c, std::nullopt});
}

std::vector<ThetaTwoImage> images_of_class(std::uint32_t n, PartitionClass c)
{
    auto ps = of_class(n, c);
    return {ps.begin(), ps.end()};
}

Partition as_partition(ThetaTwoImage const & img)
{
    if (auto const * p = std::get_if<Partition>(&img))
        return *p;
    throw DomainError("expected a partition, got witness pair " + to_text(img));
}

BijectionPlan plan_for(BijectionCheck which, OddDistinctBijection const & phi)
{
    switch (which) {
    case BijectionCheck::glaisher:
        return {MapId::glaisher_to_odd,
                [](std::uint32_t n) { return of_class(n, PartitionClass::distinct); },
                [](std::uint32_t n) { return images_of_class(n, PartitionClass::odd); },
                [&phi](Partition const & p) { return ThetaTwoImage(phi.to_odd(p)); },
                [&phi](ThetaTwoImage const & i) { return phi.to_distinct(as_partition(i)); }};
    case BijectionCheck::theta1:
        return {MapId::theta1,
                [](std::uint32_t n) { return of_class(n, PartitionClass::bo_prime); },
                [](std::uint32_t n) { return images_of_class(n, PartitionClass::co); },
                [&phi](Partition const & p) { return ThetaTwoImage(theta1(p, phi)); },
                [&phi](ThetaTwoImage const & i) { return theta1_inv(as_partition(i), phi); }};
    case BijectionCheck::theta1_even:
        return {MapId::theta1_even,
                [](std::uint32_t n) { return of_class(n, PartitionClass::be_prime); },
                [](std::uint32_t n) { return images_of_class(n, PartitionClass::ce); },
                [&phi](Partition const & p) { return ThetaTwoImage(theta1_even(p, phi)); },
                [&phi](ThetaTwoImage const & i) { return theta1_even_inv(as_partition(i), phi); }};
    case BijectionCheck::theta2:
        return {MapId::theta2,
                [](std::uint32_t n) { return of_class(n, PartitionClass::bo_prime); },
                [](std::uint32_t n) {
                    auto out = images_of_class(n, PartitionClass::be_prime);
                    for (auto & w : enumerate_witness_pairs(n))
                        out.emplace_back(std::move(w));
                    return out;
                },
                [&phi](Partition const & p) { return theta2(p, phi); },
                [&phi](ThetaTwoImage const & i) { return theta2_inv(i, phi); }};
    }
    throw std::logic_error("unhandled bijection check");
}

Failure check_bijection_at(std::uint32_t n, BijectionPlan const & plan, Tamper const & tamper)
{
    auto codomain = plan.codomain(n);
    std::set<ThetaTwoImage> codomain_set(codomain.begin(), codomain.end());
    std::map<ThetaTwoImage, Partition> preimage;

    for (auto const & x : plan.domain(n)) {
        ThetaTwoImage y;
        try {
            y = plan.forward(x);
        } catch (std::exception const & e) {
            return failure(n, std::string("forward map threw: ") + e.what(), {to_text(x)});
        }
        if (tamper.image)
            tamper.image(plan.forward_id, x, y);

        if (!codomain_set.contains(y))
            return failure(n, "image lies outside the codomain", texts({x, y}));
        if (auto it = preimage.find(y); it != preimage.end())
            return failure(n, "map is not injective", texts({it->second, x, y}));
        preimage.emplace(y, x);

        Partition back;
        try {
            back = plan.inverse(y);
        } catch (std::exception const & e) {
            return failure(n, std::string("inverse map threw: ") + e.what(), texts({x, y}));
        }
        if (back != x)
            return failure(n, "inverse does not recover the input", texts({x, y, back}));
    }

    for (auto const & c : codomain) {
        if (!preimage.contains(c))
            return failure(n, "codomain element is not hit", {to_text(c)});
        auto z = plan.inverse(c);
        auto again = plan.forward(z);
        if (again != c)
            return failure(n, "forward map does not recover codomain element", texts({c, z, again}));
    }
    return std::nullopt;
}

// First element present in one sorted list but not the other.
std::optional<Partition> mismatch(std::vector<Partition> a, std::vector<Partition> b)
{
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<Partition> diff;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
    if (diff.empty())
        return std::nullopt;
    return diff.front();
}

} // namespace

std::string_view check_name(BijectionCheck which)
{
    switch (which) {
    case BijectionCheck::glaisher: return "bijection_glaisher";
    case BijectionCheck::theta1: return "bijection_theta1";
    case BijectionCheck::theta1_even: return "bijection_theta1_even";
    case BijectionCheck::theta2: return "bijection_theta2";
    }
    return "bijection_unknown";
}

VerificationReport verify_even_part_identity(std::uint32_t n_max, VerifyOptions const & opts)
{
    auto start = Clock::now();
    auto f = over_both_pipelines(n_max, opts, check_even_part_identity);
    return finish("even_part_identity", 1, n_max, std::move(f), start);
}

VerificationReport verify_parity_split(std::uint32_t n_max, VerifyOptions const & opts)
{
    auto start = Clock::now();
    auto f = over_both_pipelines(n_max, opts, check_parity_split);
    return finish("parity_split", 1, n_max, std::move(f), start);
}

VerificationReport verify_prime_class_correspondence(std::uint32_t n_max, VerifyOptions const & opts)
{
    auto start = Clock::now();
    auto limit = enumeration_limit(n_max, opts);
    auto f = first_failure(0, limit, opts.threads, [](std::uint32_t n) -> Failure {
        std::vector<Partition> bo, be, bo_prime, be_prime;
        PartitionStream s(EnumerationQuery{n, std::nullopt, std::nullopt});
        s.for_each([&](Partition const & p) {
            auto cls = classify(p);
            if (cls.contains(PartitionClass::bo)) bo.push_back(p);
            if (cls.contains(PartitionClass::be)) be.push_back(p);
            if (cls.contains(PartitionClass::bo_prime)) bo_prime.push_back(p);
            if (cls.contains(PartitionClass::be_prime)) be_prime.push_back(p);
        });
        bool even = n % 2 == 0;
        auto const & bo_match = even ? bo_prime : be_prime;
        auto const & be_match = even ? be_prime : bo_prime;
        if (auto m = mismatch(bo, bo_match))
            return failure(n, even ? "B_o differs from B_o'" : "B_o differs from B_e'", {to_text(*m)});
        if (auto m = mismatch(be, be_match))
            return failure(n, even ? "B_e differs from B_e'" : "B_e differs from B_o'", {to_text(*m)});
        return std::nullopt;
    });
    return finish("prime_class_correspondence", 0, limit, std::move(f), start);
}

VerificationReport verify_bijection(BijectionCheck which, std::uint32_t n_max, VerifyOptions const & opts,
                                    OddDistinctBijection const & phi)
{
    auto start = Clock::now();
    auto limit = enumeration_limit(n_max, opts);
    auto plan = plan_for(which, phi);
    auto f = first_failure(1, limit, opts.threads,
                           [&](std::uint32_t n) { return check_bijection_at(n, plan, opts.tamper); });
    return finish(std::string(check_name(which)), 1, limit, std::move(f), start);
}

VerificationReport verify_pipeline_agreement(std::uint32_t n_max_enum, std::uint32_t n_max_formula,
                                             VerifyOptions const & opts)
{
    constexpr std::uint32_t max_avoided = 20;
    auto start = Clock::now();
    auto engine_max = std::max(n_max_enum, n_max_formula);
    CountEngine engine(engine_max);

    Failure f;
    for (std::uint32_t n = 0; n <= n_max_formula && !f; ++n) {
        for (std::uint32_t m = 1; m <= max_avoided; ++m) {
            auto rec = engine.distinct_avoiding(n, m, AvoidMethod::recurrence);
            auto alt = engine.distinct_avoiding(n, m, AvoidMethod::alternating_sum);
            if (rec != alt) {
                f = failure(n, "avoiding count for m=" + std::to_string(m) + ": recurrence " + rec.to_string()
                                   + ", alternating sum " + alt.to_string());
                break;
            }
        }
    }

    if (!f) {
        f = first_failure(0, n_max_enum, opts.threads, [&](std::uint32_t n) -> Failure {
            auto enumerated = tampered(enumerated_row(n, std::max(n_max_enum, opts.enumeration_budget)),
                                       Pipeline::enumeration, opts);
            auto formula = tampered(engine.row(n), Pipeline::formula, opts);
            if (enumerated != formula)
                return failure(n, "pipelines disagree; " + counts_detail(enumerated, Pipeline::enumeration) + "; "
                                      + counts_detail(formula, Pipeline::formula));
            for (std::uint32_t m = 1; m <= max_avoided; ++m) {
                Count brute = enumerate_distinct(n, m).size();
                auto rec = engine.distinct_avoiding(n, m);
                if (brute != rec)
                    return failure(n, "avoiding count for m=" + std::to_string(m) + ": enumeration "
                                          + brute.to_string() + ", recurrence " + rec.to_string());
            }
            return std::nullopt;
        });
    }
    return finish("pipeline_agreement", 0, std::max(n_max_enum, n_max_formula), std::move(f), start);
}

std::vector<VerificationReport> verify_all(std::uint32_t formula_max, VerifyOptions const & opts)
{
    auto enum_max = enumeration_limit(formula_max, opts);
    std::vector<VerificationReport> out;
    out.push_back(verify_even_part_identity(formula_max, opts));
    out.push_back(verify_parity_split(formula_max, opts));
    out.push_back(verify_prime_class_correspondence(enum_max, opts));
    for (auto which : {BijectionCheck::glaisher, BijectionCheck::theta1, BijectionCheck::theta1_even,
                       BijectionCheck::theta2})
        out.push_back(verify_bijection(which, enum_max, opts));
    out.push_back(verify_pipeline_agreement(enum_max, formula_max, opts));
    return out;
}

namespace {

nlohmann::json report_json(VerificationReport const & r)
{
    nlohmann::json j{
        {"check", r.check},
        {"n_min", r.n_min},
        {"n_max", r.n_max},
        {"status", r.passed ? "pass" : "fail"},
        {"counterexample", nullptr},
        {"metadata", {{"elapsed_ms", std::chrono::duration<double, std::milli>(r.elapsed).count()}}},
    };
    if (r.counterexample)
        j["counterexample"] = {
            {"n", r.counterexample->n},
            {"detail", r.counterexample->detail},
            {"partitions", r.counterexample->partitions},
        };
    return j;
}

} // namespace

std::string to_json(VerificationReport const & report) { return report_json(report).dump(2); }

std::string to_json(std::vector<VerificationReport> const & reports)
{
    auto arr = nlohmann::json::array();
    for (auto const & r : reports)
        arr.push_back(report_json(r));
    return arr.dump(2);
}

} // namespace partitions
