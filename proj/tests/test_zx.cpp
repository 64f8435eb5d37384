// SPDX-License-Identifier: MIT
#include "zxgopt/zx_diagram.hpp"
#include "zxgopt/zx_rules.hpp"

#include "zxgopt/verify.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>

using namespace zxgopt;

namespace {

/// All matches of every rule kind, found by brute-force enumeration over
/// vertices and vertex pairs. Independent of match_rules.
std::vector<RuleMatch> brute_force_matches(const ZXDiagram& d) {
    std::vector<RuleMatch> out;
    for (VertexId v : d.vertices())
        if (check_local_complement(d, v)) out.push_back({RuleKind::LocalComplement, v, 0});
    const auto vs = d.vertices();
    for (VertexId u : vs)
        for (VertexId v : vs)
            if (u < v && d.edge(u, v).had && check_pivot(d, u, v))
                out.push_back({RuleKind::Pivot, u, v});
    return out;
}

ZXDiagram graph_like_of(const Circuit& c) { return preprocess(to_graph(c)); }

} // namespace

TEST_CASE("to_graph: CNOT becomes a connected Z/X pair with four boundaries") {
    const ZXDiagram d = to_graph(Circuit(2, {Gate::cnot(0, 1)}));
    int z = 0, x = 0, b = 0;
    for (VertexId v : d.vertices()) {
        switch (d.type_of(v)) {
        case VertexType::Z: ++z; break;
        case VertexType::X: ++x; break;
        case VertexType::Boundary: ++b; break;
        }
    }
    CHECK(z == 1);
    CHECK(x == 1);
    CHECK(b == 4);
    // The spider pair is joined by a simple edge.
    for (VertexId v : d.vertices()) {
        if (d.type_of(v) != VertexType::Z || d.is_boundary(v)) continue;
        for (VertexId w : d.neighbors(v))
            if (d.type_of(w) == VertexType::X) CHECK(d.edge(v, w).simple);
    }
}

TEST_CASE("preprocess: CZ diagram is already graph-like (fixpoint)") {
    const ZXDiagram d = to_graph(Circuit(2, {Gate::cz(0, 1)}));
    CHECK(d.is_graph_like());
    ZXDiagram e = d;
    normalize_graph_like(e);
    CHECK(e.vertex_count() == d.vertex_count());
    CHECK(e.count_hadamard_edges() == d.count_hadamard_edges());
}

TEST_CASE("preprocess: CNOT color change yields hadamard spider edges") {
    const ZXDiagram d = graph_like_of(Circuit(2, {Gate::cnot(0, 1)}));
    CHECK(d.is_graph_like());
    for (const auto& [pair, bits] : d.edges()) {
        const bool spider_pair = !d.is_boundary(pair.first) && !d.is_boundary(pair.second);
        if (spider_pair) CHECK(bits.had);
    }
    CHECK(diagram_matches_circuit(d, Circuit(2, {Gate::cnot(0, 1)}), 1e-9));
}

TEST_CASE("preprocess: graph-like predicate and tensor preservation on random circuits") {
    Rng rng(303);
    for (int trial = 0; trial < 200; ++trial) {
        const Circuit c = testutil::random_circuit(3, 14, rng, /*with_rz=*/true);
        const ZXDiagram d = graph_like_of(c);
        std::string why;
        CHECK_MESSAGE(d.is_graph_like(&why), why);
        CHECK(diagram_matches_circuit(d, c, 1e-9));
    }
}

TEST_CASE("count_hadamard_edges equals a brute-force recount") {
    Rng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const ZXDiagram d = graph_like_of(testutil::random_circuit(4, 20, rng));
        int n = 0;
        for (const auto& [pair, bits] : d.edges())
            if (bits.had) ++n;
        CHECK(d.count_hadamard_edges() == n);
        CHECK(graph_like_of(Circuit(2, {Gate::cz(0, 1)})).count_hadamard_edges() == 1);
    }
}

TEST_CASE("match_rules: forced local complement on a single pi/2 interior spider") {
    // H S H on one qubit gives an interior spider of phase pi/2 between two
    // boundary-adjacent spiders after normalization.
    const ZXDiagram d = graph_like_of(Circuit(1, {Gate::h(0), Gate::s(0), Gate::h(0)}));
    const auto matches = match_rules(d);
    int lc = 0;
    for (const auto& m : matches)
        if (m.rule == RuleKind::LocalComplement) ++lc;
    CHECK(lc == 1);
}

TEST_CASE("match_rules agrees with brute force and is deterministic") {
    Rng rng(404);
    for (int trial = 0; trial < 100; ++trial) {
        const ZXDiagram d = graph_like_of(testutil::random_circuit(4, 18, rng));
        const auto a = match_rules(d);
        const auto b = brute_force_matches(d);
        REQUIRE(a.size() == b.size());
        for (const auto& m : a) {
            CHECK(match_valid(d, m));
            CHECK(std::find(b.begin(), b.end(), m) != b.end());
        }
        CHECK(match_rules(d) == a); // identical ordered result on re-query
    }
}

TEST_CASE("match_rules excludes boundary-adjacent spiders") {
    Rng rng(505);
    for (int trial = 0; trial < 50; ++trial) {
        const ZXDiagram d = graph_like_of(testutil::random_circuit(3, 12, rng));
        for (const auto& m : match_rules(d)) {
            std::vector<VertexId> targets{m.a};
            if (m.rule == RuleKind::Pivot) targets.push_back(m.b);
            for (VertexId t : targets) {
                CHECK_FALSE(d.is_boundary(t));
                for (VertexId w : d.neighbors(t)) CHECK_FALSE(d.is_boundary(w));
            }
        }
    }
}

TEST_CASE("apply_rule: fusion adds phases across a simple edge") {
    ZXDiagram d;
    const VertexId i0 = d.add_vertex(VertexType::Boundary, {}, 0, 0);
    const VertexId a = d.add_vertex(VertexType::Z, Phase(1, 4), 0, 1);
    const VertexId b = d.add_vertex(VertexType::Z, Phase(1, 2), 0, 2);
    const VertexId o0 = d.add_vertex(VertexType::Boundary, {}, 0, 3);
    d.add_edge(i0, a, EdgeType::Simple);
    d.add_edge(a, b, EdgeType::Simple);
    d.add_edge(b, o0, EdgeType::Simple);
    d.set_inputs({i0});
    d.set_outputs({o0});

    REQUIRE(check_fusion(d, a, b));
    apply_rule(d, {RuleKind::Fusion, a, b});
    CHECK(d.alive(a));
    CHECK_FALSE(d.alive(b));
    CHECK(d.phase(a) == Phase(3, 4));
}

TEST_CASE("apply_rule: stale matches are rejected") {
    ZXDiagram d = graph_like_of(Circuit(1, {Gate::h(0), Gate::s(0), Gate::h(0)}));
    const auto matches = match_rules(d);
    REQUIRE_FALSE(matches.empty());
    ZXDiagram d2 = d;
    apply_rule(d2, matches[0]);
    CHECK_THROWS_AS(apply_rule(d2, matches[0]), std::invalid_argument);
}

TEST_CASE("local complementation involution on the neighbourhood adjacency") {
    // Complementing the same neighbour set twice restores adjacency among
    // the survivors (checked on adjacency only, before deletion).
    Rng rng(606);
    for (int trial = 0; trial < 40; ++trial) {
        const ZXDiagram d = graph_like_of(testutil::random_circuit(4, 20, rng));
        const auto matches = match_rules(d);
        const RuleMatch* lc = nullptr;
        for (const auto& m : matches)
            if (m.rule == RuleKind::LocalComplement) { lc = &m; break; }
        if (!lc) continue;
        const auto nb = d.neighbors(lc->a);
        ZXDiagram e = d;
        auto complement = [&](ZXDiagram& g) {
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j)
                    g.add_edge(nb[i], nb[j], EdgeType::Hadamard);
        };
        complement(e);
        complement(e);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                CHECK(e.edge(nb[i], nb[j]).had == d.edge(nb[i], nb[j]).had);
    }
}

TEST_CASE("rewrite soundness: every rule preserves the tensor up to a scalar") {
    Rng rng(707);
    int applied = 0;
    for (int trial = 0; trial < 120 || applied < 60; ++trial) {
        if (trial > 600) break;
        const Circuit c = testutil::random_circuit(3, 12, rng);
        const CMat ref = unitary_of(c);

        // Raw diagram: color change and fusion matches live here.
        ZXDiagram raw = to_graph(c);
        std::vector<RuleMatch> raw_matches;
        for (VertexId v : raw.vertices()) {
            if (check_color_change(raw, v)) raw_matches.push_back({RuleKind::ColorChange, v, 0});
            if (check_identity(raw, v)) raw_matches.push_back({RuleKind::Identity, v, 0});
        }
        for (const auto& [pair, bits] : raw.edges())
            if (check_fusion(raw, pair.first, pair.second))
                raw_matches.push_back({RuleKind::Fusion, pair.first, pair.second});
        if (!raw_matches.empty()) {
            const auto& m = raw_matches[static_cast<std::size_t>(
                rng.uniform_int(0, static_cast<std::int64_t>(raw_matches.size()) - 1))];
            ZXDiagram d = raw;
            apply_rule(d, m);
            CHECK(proportional(zx_tensor(d), ref, 1e-9));
            ++applied;
        }

        // Graph-like diagram: local complement and pivot matches.
        const ZXDiagram gl = graph_like_of(c);
        const auto matches = match_rules(gl);
        if (!matches.empty()) {
            const auto& m = matches[static_cast<std::size_t>(
                rng.uniform_int(0, static_cast<std::int64_t>(matches.size()) - 1))];
            ZXDiagram d = gl;
            apply_rule(d, m);
            std::string why;
            CHECK_MESSAGE(d.is_graph_like(&why), why);
            CHECK(proportional(zx_tensor(d), ref, 1e-9));
            ++applied;
        }
    }
    CHECK(applied >= 60);
}
