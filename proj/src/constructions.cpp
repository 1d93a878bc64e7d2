#include <algorithm>

#include "rankforge/bases.hpp"
#include "rankforge/constructions.hpp"
#include "rankforge/ranks.hpp"

namespace rankforge {

const char* to_string(RankFn f) {
    switch (f) {
        case RankFn::Real: return "real";
        case RankFn::Binary: return "binary";
        default: return "boolean";
    }
}

namespace {

using Target = RankClaim::Target;
using Bound = RankClaim::Bound;

const char* kTwoSourceText = "010\n110\n111\n011\n";

Fixture two_source_fixture(const std::string& name) {
    return Fixture{
        name,
        BinaryMatrix::parse(kTwoSourceText),
        {{"x", ColumnVector::from_string("1001")}, {"y", ColumnVector::from_string("1100")}},
        {
            {RankFn::Binary, Target::Matrix, Bound::Exact, 3},
            {RankFn::Real, Target::Matrix, Bound::Exact, 3},
            {RankFn::Boolean, Target::Matrix, Bound::Exact, 3},
            {RankFn::Binary, Target::AugmentedEach, Bound::Exact, 3},
            {RankFn::Binary, Target::AugmentedAll, Bound::Exact, 4},
            {RankFn::Boolean, Target::AugmentedAll, Bound::Exact, 4},
            {RankFn::Real, Target::AugmentedAll, Bound::Exact, 3},
        },
    };
}

}  // namespace

Fixture fixture(const std::string& name) {
    if (name == "sec2_example") return two_source_fixture(name);
    if (name == "gap_boolean_base") {
        Fixture f = two_source_fixture(name);
        f.claims.push_back({RankFn::Boolean, Target::AugmentedEach, Bound::Exact, 3});
        return f;
    }
    if (name == "boolean_example") {
        return Fixture{
            name,
            BinaryMatrix::parse("111\n111\n011\n001\n"),
            {{"x", ColumnVector::from_string("0110")}, {"y", ColumnVector::from_string("0010")}},
            {
                {RankFn::Boolean, Target::Matrix, Bound::Exact, 3},
                {RankFn::Binary, Target::Matrix, Bound::Exact, 3},
                {RankFn::Real, Target::Matrix, Bound::Exact, 3},
                {RankFn::Boolean, Target::AugmentedEach, Bound::Exact, 3},
                {RankFn::Boolean, Target::AugmentedAll, Bound::Exact, 4},
            },
        };
    }
    if (name == "single_source") {
        return Fixture{
            name,
            BinaryMatrix::parse("110\n011\n011\n001\n"),
            {},
            {
                {RankFn::Binary, Target::Matrix, Bound::Exact, 3},
                {RankFn::Real, Target::Matrix, Bound::Exact, 3},
            },
        };
    }
    if (name == "identical_rows") {
        return Fixture{
            name,
            BinaryMatrix::parse("11111\n11111\n00011\n01100\n01001\n00110\n"),
            {},
            {
                {RankFn::Binary, Target::Matrix, Bound::Exact, 5},
                {RankFn::Real, Target::Matrix, Bound::Exact, 4},
            },
        };
    }
    if (name == "sums_inline") {
        return Fixture{
            name,
            BinaryMatrix::parse("110\n001\n011\n111\n"),
            {},
            {
                {RankFn::Binary, Target::Matrix, Bound::Exact, 3},
                {RankFn::Real, Target::Matrix, Bound::Exact, 3},
            },
        };
    }
    throw NotFound("unknown fixture: " + name);
}

std::vector<std::string> fixture_names() {
    return {"sec2_example",   "boolean_example", "single_source",
            "identical_rows", "sums_inline",     "gap_boolean_base"};
}

namespace {

// d diagonal copies of the block, then per-block extra columns on the right,
// block order left to right.
BinaryMatrix blockwise_augmented(const BinaryMatrix& block,
                                 const std::vector<ColumnVector>& extras, std::size_t d) {
    std::size_t n = block.rows();
    std::size_t m = block.cols();
    std::size_t e = extras.size();
    BinaryMatrix::Builder b(n * d, m * d + e * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < m; ++c)
                if (block.get(r, c)) b.set(i * n + r, i * m + c);
        for (std::size_t v = 0; v < e; ++v)
            for (std::size_t r = 0; r < n; ++r)
                if (extras[v].get(r)) b.set(i * n + r, m * d + i * e + v);
    }
    return b.build();
}

}  // namespace

Fixture build_gap_binary(std::size_t d, const SolverConfig& cfg) {
    if (d == 0) throw InvalidArgument("gap construction needs d >= 1");
    BinaryMatrix a = BinaryMatrix::parse(kTwoSourceText);
    BaseGraph g = base_graph(a, Semiring::Binary, cfg);
    std::vector<int> src = source_indices(g);
    std::vector<ColumnVector> extras;
    for (int i : {src[0], src[1]})
        for (const ColumnVector& v : g.nodes[i].vectors) extras.push_back(v);

    Fixture f{"gap_binary_d" + std::to_string(d),
              blockwise_augmented(a, extras, d),
              {},
              {
                  {RankFn::Binary, Target::Matrix, Bound::AtLeast, (int)(4 * d)},
                  {RankFn::Real, Target::Matrix, Bound::Exact, (int)(3 * d)},
              }};
    if (f.matrix.cells() > cfg.max_cells)
        throw ResourceLimitError("gap construction exceeds the configured cell cap");
    return f;
}

Fixture build_gap_boolean(std::size_t d, const SolverConfig& cfg) {
    if (d == 0) throw InvalidArgument("gap construction needs d >= 1");
    BinaryMatrix a = BinaryMatrix::parse(kTwoSourceText);
    std::vector<ColumnVector> extras = {ColumnVector::from_string("1001"),
                                        ColumnVector::from_string("1100")};
    Fixture f{"gap_boolean_d" + std::to_string(d),
              blockwise_augmented(a, extras, d),
              {},
              {
                  {RankFn::Boolean, Target::Matrix, Bound::Exact, (int)(4 * d)},
                  {RankFn::Binary, Target::Matrix, Bound::Exact, (int)(4 * d)},
                  {RankFn::Real, Target::Matrix, Bound::Exact, (int)(3 * d)},
              }};
    if (f.matrix.cells() > cfg.max_cells)
        throw ResourceLimitError("gap construction exceeds the configured cell cap");
    return f;
}

Fixture build_Ak(std::size_t k) {
    if (k == 0) throw InvalidArgument("row duplication family needs k >= 1");
    std::size_t n = k + 4;
    BinaryMatrix::Builder b(n, 4);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < 4; ++c) b.set(r, c);
    const char* tail[4] = {"0011", "1100", "1001", "0110"};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t c = 0; c < 4; ++c)
            if (tail[i][c] == '1') b.set(k + i, c);

    Fixture f{"a_k" + std::to_string(k),
              b.build(),
              {},
              {
                  {RankFn::Binary, Target::Matrix, Bound::Exact, 4},
                  {RankFn::Boolean, Target::Matrix, Bound::Exact, 4},
                  {RankFn::Real, Target::Matrix, Bound::Exact, 3},
                  {RankFn::Binary, Target::AugmentedEach, Bound::Exact, 4},
                  {RankFn::Binary, Target::AugmentedAll, Bound::Exact, (int)k + 3},
                  {RankFn::Real, Target::AugmentedAll, Bound::Exact, (int)k + 3},
                  {RankFn::Boolean, Target::AugmentedAll, Bound::AtLeast, (int)k},
              }};
    for (std::size_t i = 0; i < k; ++i)
        f.vectors.emplace_back("x" + std::to_string(i + 1), ColumnVector::of_support(n, {i, k}));
    return f;
}

Fixture augment_with_source_bases(const BinaryMatrix& a, Semiring s, const SolverConfig& cfg) {
    BaseGraph g = base_graph(a, s, cfg);
    std::vector<int> src = source_indices(g);
    if (src.size() < 2) throw InvalidArgument("base graph has a single source");

    int base_rank = s == Semiring::Binary ? binary_rank(a, cfg).rank : boolean_rank(a, cfg).rank;
    std::vector<ColumnVector> extras;
    for (int i : {src[0], src[1]})
        for (const ColumnVector& v : g.nodes[i].vectors) extras.push_back(v);

    RankFn fn = s == Semiring::Binary ? RankFn::Binary : RankFn::Boolean;
    Fixture f{std::string("source_augmented_") + to_string(s),
              augment(a, extras),
              {},
              {{fn, Target::Matrix, Bound::AtLeast, base_rank + 1}}};
    if (real_rank(a) == base_rank)
        f.claims.push_back({RankFn::Real, Target::Matrix, Bound::Exact, real_rank(a)});
    return f;
}

namespace {

int rank_of(const BinaryMatrix& m, RankFn fn, const SolverConfig& cfg) {
    switch (fn) {
        case RankFn::Real: return real_rank(m);
        case RankFn::Binary: return binary_rank(m, cfg).rank;
        default: return boolean_rank(m, cfg).rank;
    }
}

bool bound_ok(const RankClaim& c, int actual) {
    return c.bound == RankClaim::Bound::Exact ? actual == c.value : actual >= c.value;
}

}  // namespace

ClaimOutcome check_claim(const Fixture& f, const RankClaim& c, const SolverConfig& cfg) {
    const char* rel = c.bound == RankClaim::Bound::Exact ? "==" : ">=";
    std::string label = std::string(to_string(c.fn));
    if (c.target == RankClaim::Target::Matrix) {
        int actual = rank_of(f.matrix, c.fn, cfg);
        return {bound_ok(c, actual), label + "(" + f.name + ") = " + std::to_string(actual) +
                                         ", want " + rel + " " + std::to_string(c.value)};
    }
    if (c.target == RankClaim::Target::AugmentedAll) {
        std::vector<ColumnVector> all;
        for (const auto& [name, v] : f.vectors) all.push_back(v);
        int actual = rank_of(augment(f.matrix, all), c.fn, cfg);
        return {bound_ok(c, actual), label + "(" + f.name + "|all) = " + std::to_string(actual) +
                                         ", want " + rel + " " + std::to_string(c.value)};
    }
    for (const auto& [name, v] : f.vectors) {
        int actual = rank_of(augment(f.matrix, {v}), c.fn, cfg);
        if (!bound_ok(c, actual))
            return {false, label + "(" + f.name + "|" + name + ") = " + std::to_string(actual) +
                               ", want " + rel + " " + std::to_string(c.value)};
    }
    return {true, label + "(" + f.name + "|each of " + std::to_string(f.vectors.size()) +
                      " vectors) " + rel + " " + std::to_string(c.value)};
}

void to_json(nlohmann::json& j, const RankClaim& c) {
    const char* target = c.target == RankClaim::Target::Matrix          ? "matrix"
                         : c.target == RankClaim::Target::AugmentedAll ? "augmented_all"
                                                                       : "augmented_each";
    j = nlohmann::json{{"rank", to_string(c.fn)},
                       {"target", target},
                       {"bound", c.bound == RankClaim::Bound::Exact ? "exact" : "at_least"},
                       {"value", c.value}};
}

void to_json(nlohmann::json& j, const Fixture& f) {
    nlohmann::json vectors = nlohmann::json::object();
    for (const auto& [name, v] : f.vectors) vectors[name] = v.to_string();
    j = nlohmann::json{
        {"name", f.name}, {"matrix", f.matrix}, {"vectors", vectors}, {"claims", f.claims}};
}

}  // namespace rankforge
