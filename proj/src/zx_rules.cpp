// SPDX-License-Identifier: MIT
#include "zxgopt/zx_rules.hpp"

#include <algorithm>
#include <stdexcept>

namespace zxgopt {

bool check_local_complement(const ZXDiagram& d, VertexId v) {
    if (!d.alive(v) || d.type_of(v) != VertexType::Z) return false;
    if (!d.phase(v).is_proper_clifford()) return false;
    if (d.degree(v) == 0) return false;
    for (VertexId w : d.neighbors(v)) {
        if (d.is_boundary(w) || d.type_of(w) != VertexType::Z) return false;
        const auto bits = d.edge(v, w);
        if (!bits.had || bits.simple) return false;
    }
    return true;
}

bool check_pivot(const ZXDiagram& d, VertexId u, VertexId v) {
    if (!d.alive(u) || !d.alive(v) || u == v) return false;
    if (d.type_of(u) != VertexType::Z || d.type_of(v) != VertexType::Z) return false;
    if (!d.phase(u).is_pauli() || !d.phase(v).is_pauli()) return false;
    const auto bits = d.edge(u, v);
    if (!bits.had || bits.simple) return false;
    for (VertexId x : {u, v}) {
        for (VertexId w : d.neighbors(x)) {
            if (d.is_boundary(w) || d.type_of(w) != VertexType::Z) return false;
            const auto eb = d.edge(x, w);
            if (!eb.had || eb.simple) return false;
        }
    }
    return true;
}

bool check_identity(const ZXDiagram& d, VertexId v) {
    if (!d.alive(v) || d.is_boundary(v)) return false;
    if (!d.phase(v).is_zero() || d.degree(v) != 2) return false;
    const auto nb = d.neighbors(v);
    const auto ea = d.edge(v, nb[0]), eb = d.edge(v, nb[1]);
    if ((ea.simple && ea.had) || (eb.simple && eb.had)) return false;
    return true;
}

bool check_fusion(const ZXDiagram& d, VertexId u, VertexId v) {
    if (!d.alive(u) || !d.alive(v) || u == v) return false;
    if (d.is_boundary(u) || d.is_boundary(v)) return false;
    if (d.type_of(u) != d.type_of(v)) return false;
    return d.edge(u, v).simple;
}

bool check_color_change(const ZXDiagram& d, VertexId v) {
    return d.alive(v) && d.type_of(v) == VertexType::X;
}

std::vector<RuleMatch> match_rules(const ZXDiagram& d) {
    std::vector<RuleMatch> out;
    const auto vs = d.vertices();
    for (VertexId v : vs)
        if (check_local_complement(d, v)) out.push_back({RuleKind::LocalComplement, v, 0});
    for (const auto& [pair, bits] : d.edges()) {
        if (!bits.had) continue;
        if (check_pivot(d, pair.first, pair.second))
            out.push_back({RuleKind::Pivot, pair.first, pair.second});
    }
    return out;
}

bool match_valid(const ZXDiagram& d, const RuleMatch& m) {
    switch (m.rule) {
    case RuleKind::Identity: return check_identity(d, m.a);
    case RuleKind::Fusion: return check_fusion(d, m.a, m.b);
    case RuleKind::ColorChange: return check_color_change(d, m.a);
    case RuleKind::LocalComplement: return check_local_complement(d, m.a);
    case RuleKind::Pivot: return check_pivot(d, m.a, m.b);
    }
    return false;
}

namespace {

void toggle_hadamard(ZXDiagram& d, VertexId u, VertexId v) {
    d.add_edge(u, v, EdgeType::Hadamard);
}

void apply_local_complement(ZXDiagram& d, VertexId v) {
    const Phase eps = d.phase(v);
    const auto nb = d.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
        d.add_to_phase(nb[i], -eps);
        for (std::size_t j = i + 1; j < nb.size(); ++j) toggle_hadamard(d, nb[i], nb[j]);
    }
    d.remove_vertex(v);
}

void apply_pivot(ZXDiagram& d, VertexId u, VertexId v) {
    std::vector<VertexId> only_u, only_v, common;
    const auto nu = d.neighbors(u);
    for (VertexId w : nu) {
        if (w == v) continue;
        if (d.connected(v, w)) common.push_back(w);
        else only_u.push_back(w);
    }
    for (VertexId w : d.neighbors(v)) {
        if (w == u) continue;
        if (!d.connected(u, w)) only_v.push_back(w);
    }

    for (VertexId a : only_u)
        for (VertexId b : only_v) toggle_hadamard(d, a, b);
    for (VertexId a : only_u)
        for (VertexId c : common) toggle_hadamard(d, a, c);
    for (VertexId b : only_v)
        for (VertexId c : common) toggle_hadamard(d, b, c);

    const Phase pu = d.phase(u), pv = d.phase(v);
    for (VertexId a : only_u) d.add_to_phase(a, pv);
    for (VertexId b : only_v) d.add_to_phase(b, pu);
    for (VertexId c : common) d.add_to_phase(c, pu + pv + Phase::pi());

    d.remove_vertex(u);
    d.remove_vertex(v);
}

void apply_color_change(ZXDiagram& d, VertexId v) {
    d.set_type(v, VertexType::Z);
    for (VertexId w : d.neighbors(v)) {
        ZXDiagram::EdgeBits bits = d.edge(v, w);
        std::swap(bits.simple, bits.had);
        d.remove_edges(v, w);
        if (bits.simple) d.add_edge(v, w, EdgeType::Simple);
        if (bits.had) d.add_edge(v, w, EdgeType::Hadamard);
    }
}

void apply_fusion(ZXDiagram& d, VertexId u, VertexId v) {
    d.add_to_phase(u, d.phase(v));
    ZXDiagram::EdgeBits uv = d.edge(u, v);
    d.remove_edges(u, v);
    if (uv.had) d.add_to_phase(u, Phase::pi());
    for (VertexId w : d.neighbors(v)) {
        const ZXDiagram::EdgeBits bits = d.edge(v, w);
        if (bits.simple) d.add_edge(u, w, EdgeType::Simple);
        if (bits.had) d.add_edge(u, w, EdgeType::Hadamard);
    }
    d.remove_vertex(v);
}

void apply_identity(ZXDiagram& d, VertexId v) {
    const auto nb = d.neighbors(v);
    const auto ea = d.edge(v, nb[0]), eb = d.edge(v, nb[1]);
    const bool merged_had = ea.had != eb.had;
    d.remove_vertex(v);
    d.add_edge(nb[0], nb[1], merged_had ? EdgeType::Hadamard : EdgeType::Simple);
}

} // namespace

void apply_rule(ZXDiagram& d, const RuleMatch& m) {
    if (!match_valid(d, m)) throw std::invalid_argument("stale or invalid rule match");
    switch (m.rule) {
    case RuleKind::Identity: apply_identity(d, m.a); break;
    case RuleKind::Fusion: apply_fusion(d, m.a, m.b); break;
    case RuleKind::ColorChange: apply_color_change(d, m.a); break;
    case RuleKind::LocalComplement: apply_local_complement(d, m.a); break;
    case RuleKind::Pivot: apply_pivot(d, m.a, m.b); break;
    }
    normalize_graph_like(d);
}

} // namespace zxgopt
