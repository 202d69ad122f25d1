#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "onto/model.hpp"
#include "onto/patterns.hpp"

namespace onto::aa {

// The worked example: twenty amino acids described by five
// physico-chemical facets.  The facet order below is fixed because it
// determines generated class names.
//
//   Size               Tiny Small Large        (partition)
//   Charge             Positive Neutral Negative
//   Hydrophobicity     Hydrophobic Hydrophilic
//   Polarity           Polar NonPolar
//   SideChainStructure Aromatic Aliphatic

inline constexpr std::size_t facet_count = 5;

// Fresh ontology "o:aminoAcids" with o:AminoAcid and
// o:PhysioChemicalProperty declared.
Ontology new_amino_acid_ontology();

// Expands the five tiers (Size as a partition, the rest as plain tiers),
// every one with domain o:AminoAcid and super o:PhysioChemicalProperty.
// Returns the registry of the 12 value classes.
FacetRegistry build_tiers(Ontology& ont);

// One defined class per non-empty facet selection (one value for each
// chosen facet): 4*4*3*3*3 - 1 = 431 classes, each
//   <Values>AminoAcid == AminoAcid and (hasX some Value) and ...
// with values concatenated in the fixed facet order.  Returns the new
// IRIs in generation order.
std::vector<Iri> generate_defined_classes(Ontology& ont,
                                          const FacetRegistry& registry);

struct AminoAcidRow {
    std::string name;
    std::string size;
    std::string charge;
    std::string hydrophobicity;
    std::string polarity;
    std::string side_chain;
    std::optional<std::string> comment;
};

// CSV with header
//   name,size,charge,hydrophobicity,polarity,side_chain,comment
// Lines starting with '#' and blank lines are skipped.  Fields may be
// double-quoted ("" escapes a quote inside).  Every enum cell must match
// one of the fixed facet values above; names must be unique.  Errors
// carry the 1-based source line.
std::vector<AminoAcidRow> parse_rows(std::istream& in);
std::vector<AminoAcidRow> load_rows(const std::filesystem::path& path);

// One gem per row: five facet subclass axioms, no named superclasses.
std::vector<Iri> build_gems(Ontology& ont,
                            std::span<const AminoAcidRow> rows);

// The row the tests pin everything else to.
AminoAcidRow alanine_row();

// (gem, named superclass) pairs from asserted SubClassOf axioms.  An
// ontology built by build_gems keeps its asserted hierarchy flat, so
// this comes back empty; anything else is a modelling leak.
std::vector<std::pair<Iri, Iri>>
asserted_named_supers_of_gems(const Ontology& ont);

} // namespace onto::aa
