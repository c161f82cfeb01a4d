#include <doctest.h>

#include <map>
#include <mutex>
#include <set>

#include "partitions/bijections.hpp"
#include "partitions/enumerate.hpp"

using namespace partitions;

namespace {

Partition P(char const * text) { return parse_partition(text); }

std::vector<Partition> of_class(std::uint32_t n, PartitionClass c)
{
    return enumerate_partitions({n, c, std::nullopt});
}

// A bijection unrelated to Glaisher's: pair the i-th odd partition of n with
// the (len-1-i)-th distinct partition of n in stream order.
class ReversedIndexBijection {
public:
    OddDistinctBijection pair()
    {
        return {[this](Partition const & p) { return lookup(p, true); },
                [this](Partition const & p) { return lookup(p, false); }};
    }

private:
    struct Tables {
        std::map<Partition, Partition> to_distinct, to_odd;
    };

    Partition lookup(Partition const & p, bool forward)
    {
        std::lock_guard lock(mutex_);
        auto n = static_cast<std::uint32_t>(p.sum());
        auto it = tables_.find(n);
        if (it == tables_.end()) {
            auto odd = of_class(n, PartitionClass::odd);
            auto distinct = enumerate_distinct(n);
            REQUIRE(odd.size() == distinct.size());
            Tables t;
            for (std::size_t i = 0; i < odd.size(); ++i) {
                t.to_distinct.emplace(odd[i], distinct[distinct.size() - 1 - i]);
                t.to_odd.emplace(distinct[distinct.size() - 1 - i], odd[i]);
            }
            it = tables_.emplace(n, std::move(t)).first;
        }
        auto const & table = forward ? it->second.to_distinct : it->second.to_odd;
        auto hit = table.find(p);
        if (hit == table.end())
            throw DomainError("not in the bijection's domain: " + to_text(p));
        return hit->second;
    }

    std::mutex mutex_;
    std::map<std::uint32_t, Tables> tables_;
};

} // namespace

TEST_CASE("glaisher worked examples")
{
    CHECK(glaisher_to_odd(P("12+7+6+5+3")) == P("7+5+3^7"));
    CHECK(glaisher_to_odd(P("1")) == P("1"));
    CHECK(glaisher_to_odd(P("5+2+1")) == P("5+1^3"));
    CHECK(glaisher_to_odd(Partition{}).empty());

    CHECK(glaisher_to_distinct(P("3+1^2")) == P("3+2"));
    CHECK(glaisher_to_distinct(P("5+3^2")) == P("6+5"));
    CHECK(glaisher_to_distinct(P("3^6")) == P("12+6"));
    CHECK(glaisher_to_odd(P("12+6")) == P("3^6"));

    CHECK_THROWS_AS(glaisher_to_odd(P("3^2")), DomainError);
    CHECK_THROWS_AS(glaisher_to_distinct(P("4+1")), DomainError);
}

TEST_CASE("glaisher round-trips exhaustively")
{
    for (std::uint32_t n = 0; n <= 40; ++n) {
        for (auto const & d : enumerate_distinct(n)) {
            auto o = glaisher_to_odd(d);
            CHECK(o.is_odd());
            CHECK(o.sum() == n);
            CHECK(glaisher_to_distinct(o) == d);
        }
        for (auto const & o : of_class(n, PartitionClass::odd))
            CHECK(glaisher_to_odd(glaisher_to_distinct(o)) == o);
    }
}

TEST_CASE("theta1 worked examples")
{
    CHECK(theta1(P("3+2^3+1^2")) == P("3^3+2"));
    CHECK(theta1(P("5+3^2+2")) == P("6+5+1^2"));
    CHECK(theta1(P("2")) == P("1^2"));

    CHECK(theta1_inv(P("6+5+1^2")) == P("5+3^2+2"));
    CHECK(theta1_inv(P("3^3+2")) == P("3+2^3+1^2"));
    CHECK(theta1_inv(P("1^2")) == P("2"));

    CHECK_THROWS_AS(theta1(P("2^2+1")), DomainError);    // B_e'
    CHECK_THROWS_AS(theta1(P("4+2+1")), DomainError);    // two even values
    CHECK_THROWS_AS(theta1_inv(P("2^2+1")), DomainError);  // C_e
    CHECK_THROWS_AS(theta1_inv(P("3^2+1^2")), DomainError);
}

TEST_CASE("theta2 worked examples")
{
    CHECK(theta2(P("5+2^3+1^3")) == ThetaTwoImage(P("5+2^4+1")));
    CHECK(theta2(P("5+3^2+2")) == ThetaTwoImage(WitnessPair(P("6+5+2"), 2)));
    // case 2: 2k not in D and s > 1
    CHECK(theta2(P("2^3")) == ThetaTwoImage(P("2^2+1^2")));

    CHECK(theta2_inv(P("5+2^4+1")) == P("5+2^3+1^3"));
    CHECK(theta2_inv(WitnessPair(P("6+5+2"), 2)) == P("5+3^2+2"));
    CHECK(theta2_inv(P("2^2+1^2")) == P("2^3"));

    CHECK_THROWS_AS(theta2(P("2^2")), DomainError);
    CHECK_THROWS_AS(theta2_inv(P("2^3")), DomainError);
}

TEST_CASE("theta2 follows the case rule where the printed n=24 example disagrees")
{
    // D = glaisher_to_distinct(3^2) = {6} contains 6, so the first case applies.
    CHECK(theta2(P("6^3+3^2")) == ThetaTwoImage(P("6^4")));
    CHECK(theta2_inv(P("6^4")) == P("6^3+3^2"));
    // 6^2+3^4 is already the image of 6+3^6.
    CHECK(theta2(P("6+3^6")) == ThetaTwoImage(P("6^2+3^4")));
}

TEST_CASE("empty odd remainder")
{
    CHECK(theta1(P("2^3")) == P("3^2"));
    CHECK(theta1(P("6")) == P("1^6"));
    CHECK(theta1_even(P("2^2")) == P("2^2"));
    CHECK(theta1_even(P("4^2")) == P("2^4"));
}

TEST_CASE("theta1_even examples")
{
    // D = {1}, 2 not in D: 2^2 -> 2^2 merged with D
    CHECK(theta1_even(P("2^2+1")) == P("2^2+1"));
    // D = glaisher_to_distinct(1^2) = {2} holds 2: absorb it into the block
    CHECK(theta1_even(P("2^2+1^2")) == P("2^3"));
    CHECK(theta1_even_inv(P("2^3")) == P("2^2+1^2"));
    CHECK_THROWS_AS(theta1_even(P("2^3")), DomainError);
    CHECK_THROWS_AS(theta1_even_inv(P("3^2")), DomainError);
}

TEST_CASE("theta maps are bijections onto their codomains")
{
    for (std::uint32_t n = 1; n <= 30; ++n) {
        auto bo_prime = of_class(n, PartitionClass::bo_prime);
        auto be_prime = of_class(n, PartitionClass::be_prime);

        std::set<Partition> img1;
        for (auto const & l : bo_prime) {
            auto m = theta1(l);
            CHECK(m.sum() == n);
            CHECK(in_class(m, PartitionClass::co));
            CHECK(theta1_inv(m) == l);
            img1.insert(m);
        }
        auto co = of_class(n, PartitionClass::co);
        CHECK(img1 == std::set<Partition>(co.begin(), co.end()));

        std::set<Partition> img1e;
        for (auto const & l : be_prime) {
            auto m = theta1_even(l);
            CHECK(in_class(m, PartitionClass::ce));
            CHECK(theta1_even_inv(m) == l);
            img1e.insert(m);
        }
        auto ce = of_class(n, PartitionClass::ce);
        CHECK(img1e == std::set<Partition>(ce.begin(), ce.end()));

        std::set<ThetaTwoImage> img2;
        for (auto const & l : bo_prime) {
            auto m = theta2(l);
            CHECK(image_sum(m) == n);
            CHECK(theta2_inv(m) == l);
            img2.insert(m);
        }
        std::set<ThetaTwoImage> codomain(be_prime.begin(), be_prime.end());
        for (auto const & w : enumerate_witness_pairs(n))
            codomain.insert(w);
        CHECK(img2 == codomain);
    }
}

TEST_CASE("theta maps work with any odd/distinct bijection")
{
    ReversedIndexBijection alt;
    auto phi = alt.pair();
    CHECK(phi.to_distinct(P("3+1^2")) != glaisher_to_distinct(P("3+1^2")));

    for (std::uint32_t n = 1; n <= 22; ++n) {
        auto bo_prime = of_class(n, PartitionClass::bo_prime);
        std::set<Partition> img1;
        std::set<ThetaTwoImage> img2;
        for (auto const & l : bo_prime) {
            auto m = theta1(l, phi);
            CHECK(theta1_inv(m, phi) == l);
            img1.insert(m);
            auto t = theta2(l, phi);
            CHECK(theta2_inv(t, phi) == l);
            img2.insert(t);
        }
        auto co = of_class(n, PartitionClass::co);
        CHECK(img1 == std::set<Partition>(co.begin(), co.end()));
        auto codomain_size = of_class(n, PartitionClass::be_prime).size() + enumerate_witness_pairs(n).size();
        CHECK(img2.size() == codomain_size);
    }
}

TEST_CASE("a broken bijection pair is reported")
{
    OddDistinctBijection broken{[](Partition const & p) { return p; }, glaisher_to_odd};
    CHECK_THROWS_AS(theta1(P("2+1^2"), broken), DomainError);
}

TEST_CASE("text forms and map dispatch")
{
    CHECK(to_text(theta2(P("5+3^2+2"))) == "(6+5+2, 2)");
    CHECK(parse_image("(6+5+2, 2)") == ThetaTwoImage(WitnessPair(P("6+5+2"), 2)));
    CHECK(parse_image("5+2^4+1") == ThetaTwoImage(P("5+2^4+1")));

    for (auto id : all_maps)
        CHECK(parse_map_name(map_name(id)) == id);
    CHECK_THROWS_AS(parse_map_name("theta3"), ParseError);

    CHECK(apply_map(MapId::theta1, P("3+2^3+1^2")) == ThetaTwoImage(P("3^3+2")));
    CHECK(apply_map(MapId::theta2_inv, WitnessPair(P("6+5+2"), 2)) == ThetaTwoImage(P("5+3^2+2")));
    CHECK_THROWS_AS(apply_map(MapId::theta1, WitnessPair(P("6+5+2"), 2)), DomainError);
}
