#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "partitions/bijections.hpp"
#include "partitions/count.hpp"

namespace partitions {

struct Counterexample {
    std::int64_t n = 0;
    std::string detail;
    std::vector<std::string> partitions;  // canonical text
};

struct VerificationReport {
    std::string check;
    std::uint32_t n_min = 0;
    std::uint32_t n_max = 0;
    bool passed = true;
    std::optional<Counterexample> counterexample;  // set iff !passed
    std::chrono::nanoseconds elapsed{0};
};

enum class Pipeline { formula, enumeration };

/*
 * Fault injection used by the harness self-tests: `row` may rewrite a count
 * row before it is checked, `image` may rewrite a forward map output.
 */
struct Tamper {
    std::function<void(CountRow &, Pipeline)> row;
    std::function<void(MapId, Partition const & input, ThetaTwoImage & output)> image;
};

struct VerifyOptions {
    std::uint32_t enumeration_budget = 40;
    unsigned threads = 0;  // 0: hardware concurrency
    Tamper tamper;
};

/// a(n) = (-1)^n b(n) = c(n) for 1 <= n <= n_max from formula rows, and from
/// enumerated rows up to the enumeration budget.
VerificationReport verify_even_part_identity(std::uint32_t n_max, VerifyOptions const & opts = {});

/// b_o = c_o, b_e = c_e for even n; b_o = c_e, b_e = c_o for odd n.
VerificationReport verify_parity_split(std::uint32_t n_max, VerifyOptions const & opts = {});

/// Set equality of B_o/B_e with B_o'/B_e' (swapped for odd n), 0 <= n <= n_max.
VerificationReport verify_prime_class_correspondence(std::uint32_t n_max, VerifyOptions const & opts = {});

enum class BijectionCheck {
    glaisher,     // distinct <-> odd
    theta1,       // B_o' <-> C_o
    theta1_even,  // B_e' <-> C_e
    theta2,       // B_o' <-> B_e' + A
};

std::string_view check_name(BijectionCheck which);

/// Exhaustive check for 1 <= n <= n_max: codomain membership, injectivity,
/// image equals the enumerated codomain, and both inverse round-trips.
VerificationReport verify_bijection(BijectionCheck which, std::uint32_t n_max, VerifyOptions const & opts = {},
                                    OddDistinctBijection const & phi = glaisher());

/// Enumerated rows equal formula rows for n <= n_max_enum; both avoiding-count
/// methods agree for n <= n_max_formula, m <= 20, and match enumeration for
/// n <= n_max_enum.
VerificationReport verify_pipeline_agreement(std::uint32_t n_max_enum, std::uint32_t n_max_formula,
                                             VerifyOptions const & opts = {});

/// Every check above.  Enumeration-backed checks stop at
/// min(formula_max, opts.enumeration_budget).
std::vector<VerificationReport> verify_all(std::uint32_t formula_max, VerifyOptions const & opts = {});

std::string to_json(VerificationReport const & report);
std::string to_json(std::vector<VerificationReport> const & reports);

} // namespace partitions
