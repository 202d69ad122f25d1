#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "onto/model.hpp"
#include "onto/sexpr.hpp"

namespace onto {

// Per-form attribution: the axioms each top-level form added, in order.
struct TraceEntry {
    Form form;
    std::vector<Axiom> axioms;
};

struct EvalOutput {
    Ontology ontology;
    std::vector<TraceEntry> trace;
};

// Evaluates a program.  The first form must be
//   (defontology name :prefix "p")
// and the remaining forms are processed strictly in order; names must be
// defined before use.  Heads: defclass, defoproperty, deftier,
// defpartition, as-facet, defgem.
//
// Errors carry the location of the offending form.
EvalOutput expand_trace(std::span<const Form> forms);
EvalOutput expand_trace(std::string_view text);

Ontology eval_program(std::span<const Form> forms);
Ontology eval_program(std::string_view text);

} // namespace onto
