#include "partitions/partitions.h"

#include <cstdlib>
#include <cstring>
#include <memory>

#include <json.hpp>

#include "partitions/bijections.hpp"
#include "partitions/count.hpp"
#include "partitions/enumerate.hpp"
#include "partitions/verify.hpp"

using namespace partitions;

struct pt_partition {
    Partition value;
};

struct pt_image {
    ThetaTwoImage value;
};

struct pt_enumerator {
    std::variant<PartitionStream, DistinctStream> stream;
};

struct pt_counter {
    CountEngine engine;
};

namespace {

thread_local std::string last_error;

pt_status fail(pt_status status, std::string message)
{
    last_error = std::move(message);
    return status;
}

// Maps the C++ exception hierarchy onto status codes.
template <typename F>
pt_status guarded(F && f) noexcept
{
    try {
        f();
        last_error.clear();
        return PT_OK;
    } catch (ParseError const & e) {
        return fail(PT_ERR_PARSE, e.what());
    } catch (DomainError const & e) {
        return fail(PT_ERR_DOMAIN, e.what());
    } catch (OverflowError const & e) {
        return fail(PT_ERR_OVERFLOW, e.what());
    } catch (BudgetError const & e) {
        return fail(PT_ERR_BUDGET, e.what());
    } catch (std::out_of_range const & e) {
        return fail(PT_ERR_BUDGET, e.what());
    } catch (std::invalid_argument const & e) {
        return fail(PT_ERR_INVALID_ARGUMENT, e.what());
    } catch (std::exception const & e) {
        return fail(PT_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(PT_ERR_INTERNAL, "unknown error");
    }
}

char * dup_string(std::string const & s)
{
    auto * out = static_cast<char *>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename... Ps>
bool any_null(Ps const *... ps)
{
    return ((ps == nullptr) || ...);
}

#define PT_REQUIRE_ARGS(...)                                                 \
    do {                                                                     \
        if (any_null(__VA_ARGS__))                                           \
            return fail(PT_ERR_INVALID_ARGUMENT, "null pointer argument");   \
    } while (0)

std::string row_json(CountRow const & r)
{
    // counts can exceed 64 bits, so numbers are written as literal digits
    std::string s = "{\"n\":" + std::to_string(r.n);
    auto field = [&](char const * name, std::string const & v) { s += std::string(",\"") + name + "\":" + v; };
    field("N", r.distinct.to_string());
    field("a", r.a.to_string());
    field("bo", r.bo.to_string());
    field("be", r.be.to_string());
    field("b", r.b.to_string());
    field("co", r.co.to_string());
    field("ce", r.ce.to_string());
    field("c", r.c.to_string());
    field("bo_prime", r.bo_prime.to_string());
    field("be_prime", r.be_prime.to_string());
    return s + "}";
}

} // namespace

extern "C" {

const char * pt_last_error(void) { return last_error.c_str(); }

const char * pt_status_name(pt_status status)
{
    switch (status) {
    case PT_OK: return "ok";
    case PT_END: return "end";
    case PT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PT_ERR_PARSE: return "parse error";
    case PT_ERR_DOMAIN: return "domain error";
    case PT_ERR_OVERFLOW: return "overflow";
    case PT_ERR_BUDGET: return "budget exceeded";
    case PT_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void pt_string_free(char * s) { std::free(s); }

pt_status pt_partition_parse(const char * text, pt_partition ** out)
{
    PT_REQUIRE_ARGS(text, out);
    return guarded([&] { *out = new pt_partition{parse_partition(text)}; });
}

pt_status pt_partition_parse_json(const char * json, pt_partition ** out)
{
    PT_REQUIRE_ARGS(json, out);
    return guarded([&] { *out = new pt_partition{parse_partition_json(json)}; });
}

pt_status pt_partition_from_parts(const int64_t * parts, size_t count, pt_partition ** out)
{
    PT_REQUIRE_ARGS(out);
    if (count > 0 && !parts)
        return fail(PT_ERR_INVALID_ARGUMENT, "null parts array");
    return guarded([&] {
        *out = new pt_partition{make_partition(std::span<std::int64_t const>(parts, count))};
    });
}

void pt_partition_free(pt_partition * p) { delete p; }

uint64_t pt_partition_sum(const pt_partition * p) { return p ? p->value.sum() : 0; }

size_t pt_partition_run_count(const pt_partition * p) { return p ? p->value.runs().size() : 0; }

pt_status pt_partition_run(const pt_partition * p, size_t index, uint32_t * value, uint32_t * multiplicity)
{
    PT_REQUIRE_ARGS(p, value, multiplicity);
    if (index >= p->value.runs().size())
        return fail(PT_ERR_INVALID_ARGUMENT, "run index out of range");
    *value = p->value.runs()[index].value;
    *multiplicity = p->value.runs()[index].multiplicity;
    return PT_OK;
}

pt_status pt_partition_to_text(const pt_partition * p, char ** out)
{
    PT_REQUIRE_ARGS(p, out);
    return guarded([&] { *out = dup_string(to_text(p->value)); });
}

pt_status pt_partition_to_json(const pt_partition * p, char ** out)
{
    PT_REQUIRE_ARGS(p, out);
    return guarded([&] { *out = dup_string(to_json(p->value)); });
}

unsigned pt_partition_classes(const pt_partition * p) { return p ? classify(p->value).bits() : 0; }

pt_status pt_class_parse(const char * name, pt_class * out)
{
    PT_REQUIRE_ARGS(name, out);
    return guarded([&] { *out = static_cast<pt_class>(parse_class_name(name)); });
}

pt_status pt_image_parse(const char * text, pt_image ** out)
{
    PT_REQUIRE_ARGS(text, out);
    return guarded([&] { *out = new pt_image{parse_image(text)}; });
}

pt_status pt_image_from_partition(const pt_partition * p, pt_image ** out)
{
    PT_REQUIRE_ARGS(p, out);
    return guarded([&] { *out = new pt_image{p->value}; });
}

void pt_image_free(pt_image * img) { delete img; }

int pt_image_is_witness(const pt_image * img)
{
    return img && std::holds_alternative<WitnessPair>(img->value) ? 1 : 0;
}

pt_status pt_image_to_text(const pt_image * img, char ** out)
{
    PT_REQUIRE_ARGS(img, out);
    return guarded([&] { *out = dup_string(to_text(img->value)); });
}

pt_status pt_image_to_json(const pt_image * img, char ** out)
{
    PT_REQUIRE_ARGS(img, out);
    return guarded([&] {
        if (auto const * w = std::get_if<WitnessPair>(&img->value)) {
            auto j = nlohmann::json{{"partition", nlohmann::json::parse(to_json(w->partition()))},
                                    {"even_part", w->even_part()}};
            *out = dup_string(j.dump());
        } else {
            *out = dup_string(to_json(std::get<Partition>(img->value)));
        }
    });
}

pt_status pt_map_parse(const char * name, pt_map * out)
{
    PT_REQUIRE_ARGS(name, out);
    return guarded([&] { *out = static_cast<pt_map>(parse_map_name(name)); });
}

pt_status pt_map_apply(pt_map map, const pt_image * input, pt_image ** out)
{
    PT_REQUIRE_ARGS(input, out);
    if (map < PT_MAP_GLAISHER_TO_ODD || map > PT_MAP_THETA2_INV)
        return fail(PT_ERR_INVALID_ARGUMENT, "unknown map id");
    return guarded([&] { *out = new pt_image{apply_map(static_cast<MapId>(map), input->value)}; });
}

pt_status pt_enumerator_new(uint32_t n, int class_filter, uint32_t avoid, uint32_t max_part, pt_enumerator ** out)
{
    PT_REQUIRE_ARGS(out);
    if (class_filter > PT_CLASS_BE_PRIME)
        return fail(PT_ERR_INVALID_ARGUMENT, "unknown class filter");
    if (avoid > 0) {
        if (class_filter >= 0 && class_filter != PT_CLASS_DISTINCT)
            return fail(PT_ERR_INVALID_ARGUMENT, "avoid applies to distinct partitions only");
        if (max_part > 0)
            return fail(PT_ERR_INVALID_ARGUMENT, "avoid cannot be combined with max_part");
        return guarded([&] { *out = new pt_enumerator{DistinctStream(n, avoid)}; });
    }
    EnumerationQuery q{n, std::nullopt, std::nullopt};
    if (class_filter >= 0)
        q.class_filter = static_cast<PartitionClass>(class_filter);
    if (max_part > 0)
        q.max_part = max_part;
    return guarded([&] { *out = new pt_enumerator{PartitionStream(q)}; });
}

pt_status pt_enumerator_next(pt_enumerator * e, pt_partition ** out)
{
    PT_REQUIRE_ARGS(e, out);
    std::optional<Partition> p;
    auto status = guarded([&] { p = std::visit([](auto & s) { return s.next(); }, e->stream); });
    if (status != PT_OK)
        return status;
    if (!p)
        return PT_END;
    *out = new pt_partition{std::move(*p)};
    return PT_OK;
}

void pt_enumerator_free(pt_enumerator * e) { delete e; }

const char * pt_count_csv_header(void) { return count_csv_header; }

pt_status pt_counter_new(uint32_t n_max, pt_counter ** out)
{
    PT_REQUIRE_ARGS(out);
    return guarded([&] { *out = new pt_counter{CountEngine(n_max)}; });
}

void pt_counter_free(pt_counter * c) { delete c; }

pt_status pt_counter_row_csv(const pt_counter * c, uint32_t n, char ** out)
{
    PT_REQUIRE_ARGS(c, out);
    return guarded([&] { *out = dup_string(to_csv(c->engine.row(n))); });
}

pt_status pt_counter_row_json(const pt_counter * c, uint32_t n, char ** out)
{
    PT_REQUIRE_ARGS(c, out);
    return guarded([&] { *out = dup_string(row_json(c->engine.row(n))); });
}

pt_status pt_enumerated_row_csv(uint32_t n, uint32_t budget, char ** out)
{
    PT_REQUIRE_ARGS(out);
    return guarded([&] { *out = dup_string(to_csv(enumerated_row(n, budget))); });
}

pt_status pt_verify_all(const pt_verify_options * options, char ** json_out, int * all_passed)
{
    PT_REQUIRE_ARGS(options, json_out, all_passed);
    return guarded([&] {
        VerifyOptions opts;
        opts.enumeration_budget = options->enumeration_budget;
        opts.threads = options->threads;
        auto reports = verify_all(options->formula_max, opts);
        *all_passed = std::all_of(reports.begin(), reports.end(), [](auto const & r) { return r.passed; }) ? 1 : 0;
        *json_out = dup_string(to_json(reports));
    });
}

} // extern "C"
