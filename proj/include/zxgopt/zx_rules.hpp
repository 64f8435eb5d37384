// SPDX-License-Identifier: MIT
#pragma once

#include "zxgopt/zx_diagram.hpp"

#include <vector>

namespace zxgopt {

enum class RuleKind { Identity, Fusion, ColorChange, LocalComplement, Pivot };

/// One applicable rewrite: `a` for unary rules, (`a`, `b`) for fusion and
/// pivot. Targets reference vertex ids; because ids are never reused, a
/// stale match is detectable by id absence.
struct RuleMatch {
    RuleKind rule;
    VertexId a = 0;
    VertexId b = 0;

    bool operator==(const RuleMatch& o) const {
        return rule == o.rule && a == o.a && b == o.b;
    }
};

/// Local complementation precondition: interior Z spider with phase +-pi/2
/// whose neighbours are all non-boundary spiders reached over hadamard
/// edges.
bool check_local_complement(const ZXDiagram& d, VertexId v);

/// Pivot precondition: hadamard edge between interior Z spiders with Pauli
/// phases (0 or pi) where no neighbour of either endpoint is a boundary.
bool check_pivot(const ZXDiagram& d, VertexId u, VertexId v);

bool check_identity(const ZXDiagram& d, VertexId v);
bool check_fusion(const ZXDiagram& d, VertexId u, VertexId v);
bool check_color_change(const ZXDiagram& d, VertexId v);

/// Candidate set R = R_LCH union R_PH on a graph-like diagram, ordered
/// deterministically: local complementations by target id, then pivots by
/// (min id, max id).
std::vector<RuleMatch> match_rules(const ZXDiagram& d);

/// True when `m` still satisfies its precondition on `d`.
bool match_valid(const ZXDiagram& d, const RuleMatch& m);

/// Applies the rewrite and renormalizes to graph-like form. Throws
/// std::invalid_argument on a stale match.
void apply_rule(ZXDiagram& d, const RuleMatch& m);

} // namespace zxgopt
