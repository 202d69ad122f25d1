#pragma once

#include <string>

#include "onto/model.hpp"

namespace onto {

// Deterministic Manchester-style text.  Layout rules:
//   * class frames first, sorted by rendered name, then object-property
//     frames (opt-in), then one block per DisjointClasses axiom;
//   * a frame is emitted only when it has at least one section member,
//     so declared-but-unconstrained names produce no output;
//   * sections appear as "Annotations, EquivalentTo, SubClassOf" in class
//     frames and "Annotations, Domain, Range, Characteristics" in
//     property frames, each section header indented four spaces and each
//     member eight, members sorted and comma-separated;
//   * 'and'/'or' operands are sorted alphabetically and parenthesised
//     when they are not plain names; restriction fillers likewise;
//   * no ontology header is emitted: an empty ontology renders as "".
//
// SubClassOf axioms whose left side is not a plain name have no frame to
// live in and are omitted; nothing in this code base produces them.
struct RenderOptions {
    bool include_annotations = false;    // tawny:* bookkeeping annotations
    bool include_property_frames = false;
};

std::string render(const Ontology& ont, const RenderOptions& options = {});

std::string render_expression(const ClassExpr& e);
std::string render_expression(const ClassExprPtr& e);

} // namespace onto
