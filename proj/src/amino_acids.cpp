#include "onto/amino_acids.hpp"

#include <array>
#include <fstream>
#include <set>
#include <sstream>

namespace onto::aa {

namespace {

struct FacetDef {
    const char* name;
    std::vector<const char*> values;
    bool partition;
};

const std::array<FacetDef, facet_count>& facet_defs() {
    static const std::array<FacetDef, facet_count> defs{{
        {"Size", {"Tiny", "Small", "Large"}, true},
        {"Charge", {"Positive", "Neutral", "Negative"}, false},
        {"Hydrophobicity", {"Hydrophobic", "Hydrophilic"}, false},
        {"Polarity", {"Polar", "NonPolar"}, false},
        {"SideChainStructure", {"Aromatic", "Aliphatic"}, false},
    }};
    return defs;
}

} // namespace

Ontology new_amino_acid_ontology() {
    Ontology ont = new_ontology("o:aminoAcids", "o");
    ont.declare(EntityKind::Class, "AminoAcid");
    ont.declare(EntityKind::Class, "PhysioChemicalProperty");
    return ont;
}

FacetRegistry build_tiers(Ontology& ont) {
    Iri amino = ont.make_iri("AminoAcid");
    Iri property_root = ont.make_iri("PhysioChemicalProperty");
    for (const FacetDef& def : facet_defs()) {
        TierSpec spec;
        spec.name = def.name;
        for (const char* v : def.values)
            spec.values.emplace_back(v);
        spec.domain = amino;
        spec.super = property_root;
        if (def.partition)
            defpartition(ont, spec);
        else
            deftier(ont, spec);
    }
    return FacetRegistry::from_ontology(ont);
}

std::vector<Iri> generate_defined_classes(Ontology& ont,
                                          const FacetRegistry& registry) {
    Iri amino = ont.make_iri("AminoAcid");
    const auto& defs = facet_defs();

    std::array<Iri, facet_count> props;
    for (std::size_t i = 0; i < facet_count; ++i) {
        props[i] = ont.make_iri(std::string("has") + defs[i].name);
        if (registry.values_of(props[i]).empty())
            throw Error(ErrorCode::UnregisteredFacetClass,
                        props[i].str() + " has no registered values");
    }

    std::vector<Iri> generated;
    // choice[i]: -1 = facet absent, otherwise a value index.
    std::array<int, facet_count> choice;
    choice.fill(-1);

    auto advance = [&]() {
        for (std::size_t i = facet_count; i-- > 0;) {
            if (choice[i] + 1 < static_cast<int>(defs[i].values.size())) {
                ++choice[i];
                return true;
            }
            choice[i] = -1;
        }
        return false;
    };

    while (advance()) {
        std::string name;
        std::vector<ClassExprPtr> operands{named(amino)};
        for (std::size_t i = 0; i < facet_count; ++i) {
            if (choice[i] < 0)
                continue;
            const char* value = defs[i].values[choice[i]];
            name += value;
            operands.push_back(
                some(props[i], named(ont.make_iri(value))));
        }
        name += "AminoAcid";
        Iri cls = ont.declare(EntityKind::Class, name).iri;
        ont.add_axiom(Axiom{
            EquivalentClasses{{named(cls), and_of(std::move(operands))}}});
        generated.push_back(std::move(cls));
    }
    return generated;
}

// ----------------------------------------------------------------------
// CSV input.

namespace {

const std::array<const char*, 7> kHeader = {
    "name", "size", "charge", "hydrophobicity",
    "polarity", "side_chain", "comment"};

std::vector<std::string> split_csv_line(const std::string& line, int lineno) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            if (!field.empty())
                throw Error(ErrorCode::BadRow, SourceLoc{lineno, 1},
                            "quote in the middle of a field");
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else {
            field += c;
        }
    }
    if (quoted)
        throw Error(ErrorCode::BadRow, SourceLoc{lineno, 1},
                    "unterminated quoted field");
    fields.push_back(std::move(field));
    return fields;
}

void check_enum(const std::string& cell, std::size_t facet, int lineno,
                const char* column) {
    const FacetDef& def = facet_defs()[facet];
    for (const char* v : def.values)
        if (cell == v)
            return;
    std::string options;
    for (std::size_t i = 0; i < def.values.size(); ++i) {
        if (i)
            options += "/";
        options += def.values[i];
    }
    throw Error(ErrorCode::BadEnumValue, SourceLoc{lineno, 1},
                std::string(column) + " '" + cell + "' is not one of " +
                    options);
}

} // namespace

std::vector<AminoAcidRow> parse_rows(std::istream& in) {
    std::vector<AminoAcidRow> rows;
    std::set<std::string> names;
    std::string line;
    int lineno = 0;
    bool header_seen = false;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line.front() == '#')
            continue;

        auto fields = split_csv_line(line, lineno);
        if (!header_seen) {
            if (fields.size() != kHeader.size())
                throw Error(ErrorCode::BadHeader, SourceLoc{lineno, 1},
                            "expected 7 header columns, got " +
                                std::to_string(fields.size()));
            for (std::size_t i = 0; i < kHeader.size(); ++i)
                if (fields[i] != kHeader[i])
                    throw Error(ErrorCode::BadHeader, SourceLoc{lineno, 1},
                                "header column " + std::to_string(i + 1) +
                                    " must be '" + kHeader[i] + "', got '" +
                                    fields[i] + "'");
            header_seen = true;
            continue;
        }

        if (fields.size() != kHeader.size())
            throw Error(ErrorCode::BadRow, SourceLoc{lineno, 1},
                        "expected 7 fields, got " +
                            std::to_string(fields.size()));

        AminoAcidRow row;
        row.name = fields[0];
        row.size = fields[1];
        row.charge = fields[2];
        row.hydrophobicity = fields[3];
        row.polarity = fields[4];
        row.side_chain = fields[5];
        if (!fields[6].empty())
            row.comment = fields[6];

        if (!valid_name_part(row.name))
            throw Error(ErrorCode::MalformedIri, SourceLoc{lineno, 1},
                        "name '" + row.name + "' is not a valid class name");
        if (!names.insert(row.name).second)
            throw Error(ErrorCode::DuplicateName, SourceLoc{lineno, 1},
                        "duplicate name '" + row.name + "'");
        check_enum(row.size, 0, lineno, "size");
        check_enum(row.charge, 1, lineno, "charge");
        check_enum(row.hydrophobicity, 2, lineno, "hydrophobicity");
        check_enum(row.polarity, 3, lineno, "polarity");
        check_enum(row.side_chain, 4, lineno, "side_chain");
        rows.push_back(std::move(row));
    }

    if (!header_seen)
        throw Error(ErrorCode::BadHeader, SourceLoc{1, 1},
                    "missing header row");
    return rows;
}

std::vector<AminoAcidRow> load_rows(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::Io, "cannot open " + path.string());
    return parse_rows(in);
}

std::vector<Iri> build_gems(Ontology& ont,
                            std::span<const AminoAcidRow> rows) {
    std::vector<Iri> gems;
    gems.reserve(rows.size());
    for (const AminoAcidRow& row : rows) {
        GemSpec spec;
        spec.name = row.name;
        spec.facets = {
            ont.make_iri(row.size),           ont.make_iri(row.charge),
            ont.make_iri(row.hydrophobicity), ont.make_iri(row.polarity),
            ont.make_iri(row.side_chain),
        };
        spec.comment = row.comment;
        gems.push_back(defgem(ont, spec));
    }
    return gems;
}

AminoAcidRow alanine_row() {
    AminoAcidRow row;
    row.name = "Alanine";
    row.size = "Tiny";
    row.charge = "Neutral";
    row.hydrophobicity = "Hydrophobic";
    row.polarity = "NonPolar";
    row.side_chain = "Aliphatic";
    row.comment = "An amino acid with a single methyl group as a side-chain.";
    return row;
}

std::vector<std::pair<Iri, Iri>>
asserted_named_supers_of_gems(const Ontology& ont) {
    std::vector<std::pair<Iri, Iri>> out;
    for (const Entity& e : ont.signature()) {
        if (e.kind != EntityKind::Class)
            continue;
        if (pattern_tag(ont, e.iri) != "gem")
            continue;
        for (const Axiom& ax : ont.axioms_about(e.iri)) {
            const auto* sub = std::get_if<SubClassOf>(&ax.node);
            if (!sub)
                continue;
            const NamedClass* lhs = as_named(sub->sub);
            const NamedClass* rhs = as_named(sub->super);
            if (lhs && rhs && lhs->iri == e.iri)
                out.emplace_back(lhs->iri, rhs->iri);
        }
    }
    return out;
}

} // namespace onto::aa
