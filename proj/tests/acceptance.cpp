// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <sys/wait.h>

#include "partitions/bijections.hpp"
#include "partitions/count.hpp"
#include "partitions/enumerate.hpp"
#include "partitions/verify.hpp"

using namespace partitions;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool passed = true;
    std::string note;

    void expect(bool ok, std::string const & what)
    {
        if (!ok) {
            passed = false;
            if (!note.empty())
                note += "; ";
            note += what;
        }
    }
};

std::string cli(std::string const & args)
{
    std::string cmd = std::string(PARTITIONS_CLI) + " " + args;
    FILE * pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return "<popen failed>";
    std::string out;
    std::array<char, 4096> buf;
    while (auto n = fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), n);
    pclose(pipe);
    return out;
}

std::set<std::string> listed(std::uint32_t n, PartitionClass c)
{
    std::set<std::string> out;
    for (auto const & p : enumerate_partitions({n, c, std::nullopt}))
        out.insert(to_text(p));
    return out;
}

void expect_report(Outcome & o, VerificationReport const & r)
{
    std::string what = r.check + " [" + std::to_string(r.n_min) + ".." + std::to_string(r.n_max) + "]";
    if (!r.passed && r.counterexample)
        what += " n=" + std::to_string(r.counterexample->n) + ": " + r.counterexample->detail;
    o.expect(r.passed, what);
}

double seconds_since(Clock::time_point t)
{
    return std::chrono::duration<double>(Clock::now() - t).count();
}

Outcome constants_at_6()
{
    Outcome o;
    auto start = Clock::now();
    auto formula = CountEngine(6).row(6);
    auto enumerated = enumerated_row(6);
    for (auto const * r : {&formula, &enumerated}) {
        std::string tag = r == &formula ? "formula " : "enumeration ";
        o.expect(r->a == Count(4), tag + "a(6)=4");
        o.expect(r->bo == Count(5), tag + "b_o(6)=5");
        o.expect(r->be == Count(1), tag + "b_e(6)=1");
        o.expect(r->b == SignedCount(4), tag + "b(6)=4");
        o.expect(r->co == Count(5), tag + "c_o(6)=5");
        o.expect(r->ce == Count(1), tag + "c_e(6)=1");
        o.expect(r->c == SignedCount(4), tag + "c(6)=4");
        o.expect(r->bo_prime == Count(5), tag + "|B_o'(6)|=5");
        o.expect(r->be_prime == Count(1), tag + "|B_e'(6)|=1");
    }
    o.expect(listed(6, PartitionClass::bo_prime) == std::set<std::string>{"6", "4+1^2", "3+2+1", "2^3", "2+1^4"},
             "B_o'(6) listing");
    o.expect(listed(6, PartitionClass::be_prime) == std::set<std::string>{"2^2+1^2"}, "B_e'(6) listing");
    o.expect(seconds_since(start) < 1.0, "runtime < 1 s");
    return o;
}

Outcome constants_at_7()
{
    Outcome o;
    auto start = Clock::now();
    auto formula = CountEngine(7).row(7);
    auto enumerated = enumerated_row(7);
    for (auto const * r : {&formula, &enumerated}) {
        std::string tag = r == &formula ? "formula " : "enumeration ";
        o.expect(r->a == Count(5), tag + "a(7)=5");
        o.expect(r->b == SignedCount(-5), tag + "b(7)=-5");
        o.expect(r->c == SignedCount(5), tag + "c(7)=5");
        o.expect(r->bo == Count(2), tag + "|B_o(7)|=2");
        o.expect(r->be == Count(7), tag + "|B_e(7)|=7");
        o.expect(r->co == Count(7), tag + "|C_o(7)|=7");
        o.expect(r->ce == Count(2), tag + "|C_e(7)|=2");
    }
    using S = std::set<std::string>;
    o.expect(listed(7, PartitionClass::bo) == S{"3+2^2", "2^2+1^3"}, "B_o(7) set");
    o.expect(listed(7, PartitionClass::be) == S{"6+1", "5+2", "4+3", "4+1^3", "3+2+1^2", "2^3+1", "2+1^5"},
             "B_e(7) set");
    o.expect(listed(7, PartitionClass::co) == S{"3^2+1", "5+1^2", "3+2+1^2", "4+1^3", "3+1^4", "2+1^5", "1^7"},
             "C_o(7) set");
    o.expect(listed(7, PartitionClass::ce) == S{"2^3+1", "3+2^2"}, "C_e(7) set");
    o.expect(listed(7, PartitionClass::distinct) == S{"7", "6+1", "5+2", "4+3", "4+2+1"}, "distinct(7) set");
    o.expect(seconds_since(start) < 1.0, "runtime < 1 s");
    return o;
}

Outcome even_part_identity()
{
    Outcome o;
    auto start = Clock::now();
    VerifyOptions opts;
    opts.enumeration_budget = 40;
    auto r = verify_even_part_identity(200, opts);
    expect_report(o, r);
    o.expect(r.n_min == 1 && r.n_max == 200, "range 1..200");
    o.expect(seconds_since(start) < 60.0, "runtime < 60 s");
    return o;
}

Outcome parity_split()
{
    Outcome o;
    VerifyOptions opts;
    opts.enumeration_budget = 40;
    expect_report(o, verify_parity_split(200, opts));
    return o;
}

Outcome avoiding_counts()
{
    Outcome o;
    expect_report(o, verify_pipeline_agreement(40, 200));
    return o;
}

Outcome prime_class_sets()
{
    Outcome o;
    auto r = verify_prime_class_correspondence(40);
    expect_report(o, r);
    o.expect(r.n_min == 0 && r.n_max == 40, "range 0..40");
    return o;
}

Outcome bijection_certification()
{
    Outcome o;
    for (auto which : {BijectionCheck::glaisher, BijectionCheck::theta1, BijectionCheck::theta1_even,
                       BijectionCheck::theta2}) {
        auto r = verify_bijection(which, 40);
        expect_report(o, r);
        o.expect(r.n_max == 40, std::string(check_name(which)) + " reached n=40");
    }
    o.expect(cli("map --fn theta1 '3+2^3+1^2'") == "3^3+2\n", "CLI theta1(3+2^3+1^2)");
    o.expect(cli("map --fn theta1 '5+3^2+2'") == "6+5+1^2\n", "CLI theta1(5+3^2+2)");
    o.expect(cli("map --fn theta2 '5+2^3+1^3'") == "5+2^4+1\n", "CLI theta2(5+2^3+1^3)");
    o.expect(cli("map --fn theta2 '5+3^2+2'") == "(6+5+2, 2)\n", "CLI theta2(5+3^2+2)");
    return o;
}

Outcome theta2_case_rule_at_24()
{
    Outcome o;
    auto image = theta2(parse_partition("6^3+3^2"));
    o.expect(image == ThetaTwoImage(parse_partition("6^4")), "theta2(6^3+3^2) = 6^4, got " + to_text(image));
    o.expect(image != ThetaTwoImage(parse_partition("6^2+3^4")), "not the printed 6^2+3^4");
    o.expect(theta2(parse_partition("6+3^6")) == ThetaTwoImage(parse_partition("6^2+3^4")),
             "6^2+3^4 is the image of 6+3^6");
    o.expect(cli("map --fn theta2 '6^3+3^2'") == "6^4\n", "CLI theta2(6^3+3^2)");

    // exhaustive injectivity over B_o'(24)
    std::set<ThetaTwoImage> seen;
    auto domain = enumerate_partitions({24, PartitionClass::bo_prime, std::nullopt});
    for (auto const & l : domain)
        seen.insert(theta2(l));
    o.expect(seen.size() == domain.size(), "theta2 injective on B_o'(24)");
    return o;
}

Outcome mutation_self_test()
{
    Outcome o;
    VerifyOptions counter;
    counter.tamper.row = [](CountRow & row, Pipeline p) {
        if (p == Pipeline::formula && row.n == 17)
            row.co += Count(1);
    };
    for (auto const & r : {verify_even_part_identity(30, counter), verify_parity_split(30, counter),
                           verify_pipeline_agreement(20, 30, counter)}) {
        o.expect(!r.passed, r.check + " flips to fail on a corrupted counter");
        o.expect(r.counterexample.has_value() && r.counterexample->n == 17,
                 r.check + " names n=17 in its counterexample");
    }

    VerifyOptions map;
    map.tamper.image = [](MapId id, Partition const & in, ThetaTwoImage & out) {
        if (id == MapId::theta2 && in == parse_partition("5+2^3+1^3"))
            out = parse_partition("5+2^2+1^5");
    };
    auto r = verify_bijection(BijectionCheck::theta2, 20, map);
    o.expect(!r.passed, "theta2 check flips to fail on a corrupted map output");
    o.expect(r.counterexample.has_value() && r.counterexample->n == 14 && !r.counterexample->partitions.empty(),
             "counterexample carries n=14 and the partitions");
    return o;
}

} // namespace

int main()
{
    std::pair<char const *, std::function<Outcome()>> criteria[] = {
        {"1 constants at n=6, both pipelines", constants_at_6},
        {"2 constants and sets at n=7", constants_at_7},
        {"3 a(n) = (-1)^n b(n) = c(n): formula n<=200, enumeration n<=40", even_part_identity},
        {"4 parity split of b_o/b_e vs c_o/c_e: formula n<=200, enumeration n<=40", parity_split},
        {"5 avoiding counts: recurrence = alternating sum (n<=200, m<=20) = enumeration (n<=40)", avoiding_counts},
        {"6 B_o/B_e equal B_o'/B_e' as sets by parity, 0<=n<=40", prime_class_sets},
        {"7 bijection certification 1<=n<=40 and worked examples via CLI", bijection_certification},
        {"8 theta2(6^3+3^2) = 6^4 and injectivity at n=24", theta2_case_rule_at_24},
        {"9 mutation self-test", mutation_self_test},
    };

    int failures = 0;
    for (auto const & [name, run] : criteria) {
        auto start = Clock::now();
        Outcome o;
        try {
            o = run();
        } catch (std::exception const & e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        std::printf("[%s] %s (%.3f s)%s%s\n", o.passed ? "PASS" : "FAIL", name, seconds_since(start),
                    o.passed ? "" : " -- ", o.note.c_str());
        failures += !o.passed;
    }
    std::printf("%d/%zu criteria passed\n", int(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
