#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "onto/amino_acids.hpp"
#include "onto/classifier.hpp"
#include "onto/eval.hpp"
#include "onto/json_dump.hpp"
#include "onto/manchester.hpp"
#include "onto/sexpr.hpp"

namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw onto::Error(onto::ErrorCode::Io, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw onto::Error(onto::ErrorCode::Io,
                          "cannot write " + path.string());
    out << text;
}

int run_compile(const std::string& input, const std::string& output,
                bool annotations, bool trace) {
    onto::EvalOutput result = onto::expand_trace(read_file(input));
    if (trace) {
        for (const onto::TraceEntry& entry : result.trace) {
            std::cerr << onto::print_form(entry.form) << "\n";
            for (const onto::Axiom& ax : entry.axioms)
                std::cerr << "    " << onto::debug_string(ax) << "\n";
        }
    }
    onto::RenderOptions options;
    options.include_annotations = annotations;
    options.include_property_frames = annotations;
    std::string text = onto::render(result.ontology, options);
    if (output.empty())
        std::cout << text;
    else
        write_file(output, text);
    return 0;
}

int run_classify(const std::string& input, const std::string& format,
                 bool skip_non_fragment) {
    onto::Ontology ont = onto::eval_program(read_file(input));
    onto::ClassificationOptions options;
    options.skip_non_fragment = skip_non_fragment;
    onto::SubsumptionDag dag = onto::classify(ont, options);
    if (format == "machine")
        std::cout << onto::dump_json(dag);
    else
        std::cout << onto::render_tree(dag);
    return 0;
}

int run_check(const std::string& input, bool open_world_pad) {
    onto::Ontology ont = onto::eval_program(read_file(input));
    onto::CheckOptions options;
    options.open_world_pad = open_world_pad;
    onto::CheckReport report = onto::check_against_oracle(ont, options);
    std::cout << onto::render_report(report);
    return report.ok() ? 0 : 1;
}

int run_exemplar(const std::string& rows_path, const std::string& out_dir) {
    onto::Ontology ont = onto::aa::new_amino_acid_ontology();
    onto::FacetRegistry registry = onto::aa::build_tiers(ont);
    std::vector<onto::Iri> defined =
        onto::aa::generate_defined_classes(ont, registry);

    std::vector<onto::aa::AminoAcidRow> rows;
    if (rows_path.empty())
        rows.push_back(onto::aa::alanine_row());
    else
        rows = onto::aa::load_rows(rows_path);
    std::vector<onto::Iri> gems = onto::aa::build_gems(ont, rows);

    fs::path dir(out_dir);
    fs::create_directories(dir);

    onto::RenderOptions render_options;
    render_options.include_annotations = true;
    render_options.include_property_frames = true;
    write_file(dir / "amino-acids.omn", onto::render(ont, render_options));
    write_file(dir / "amino-acids.json", onto::dump_json(ont));

    onto::SubsumptionDag dag = onto::classify(ont);
    write_file(dir / "classification.txt", onto::render_tree(dag));
    write_file(dir / "classification.json", onto::dump_json(dag));

    onto::CheckReport report = onto::check_against_oracle(ont);
    write_file(dir / "check.txt", onto::render_report(report));
    write_file(dir / "check.json", onto::dump_json(report));

    std::size_t values = 0;
    for (const onto::Iri& p : registry.properties())
        values += registry.values_of(p).size();
    std::cout << registry.properties().size() << " facets, " << values
              << " values, " << defined.size() << " defined classes, "
              << gems.size() << " gems\n";
    std::cout << "classified " << (dag.groups.size()) << " groups, "
              << dag.unsatisfiable.size() << " unsatisfiable, "
              << dag.skipped.size() << " skipped\n";
    std::cout << "check: " << report.mismatches.size() << " mismatches / "
              << report.pairs << " pairs\n";
    for (const char* name :
         {"amino-acids.omn", "amino-acids.json", "classification.txt",
          "classification.json", "check.txt", "check.json"})
        std::cout << "wrote " << (dir / name).string() << "\n";
    return report.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pattern-driven ontology construction"};
    app.require_subcommand(1);

    std::string compile_input, compile_output;
    bool compile_annotations = false, compile_trace = false;
    CLI::App* compile = app.add_subcommand(
        "compile", "evaluate a program and print Manchester-style text");
    compile->add_option("input", compile_input, "program file")->required();
    compile->add_option("-o,--output", compile_output,
                        "write here instead of stdout");
    compile->add_flag("--annotations", compile_annotations,
                      "include bookkeeping annotations and property frames");
    compile->add_flag("--trace", compile_trace,
                      "write per-form axiom attribution to stderr");

    std::string classify_input, classify_format = "text";
    bool classify_skip = false;
    CLI::App* classify = app.add_subcommand(
        "classify", "compute the inferred class hierarchy");
    classify->add_option("input", classify_input, "program file")->required();
    classify->add_option("--format", classify_format, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}));
    classify->add_flag("--skip-non-fragment", classify_skip,
                       "skip classes the classifier cannot handle");

    std::string check_input;
    bool check_pad = false;
    CLI::App* check = app.add_subcommand(
        "check", "compare the classifier with the brute-force oracle");
    check->add_option("input", check_input, "program file")->required();
    check->add_flag("--open-world-pad", check_pad,
                    "pad non-covering facets with synthetic values");

    std::string exemplar_rows, exemplar_out = "exemplar-out";
    CLI::App* exemplar = app.add_subcommand(
        "exemplar", "build the amino-acid example end to end");
    exemplar->add_option("--rows", exemplar_rows,
                         "CSV of amino acids (default: built-in Alanine)");
    exemplar->add_option("--out", exemplar_out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    std::string input_path = "<input>";
    try {
        if (compile->parsed()) {
            input_path = compile_input;
            return run_compile(compile_input, compile_output,
                               compile_annotations, compile_trace);
        }
        if (classify->parsed()) {
            input_path = classify_input;
            return run_classify(classify_input, classify_format,
                                classify_skip);
        }
        if (check->parsed()) {
            input_path = check_input;
            return run_check(check_input, check_pad);
        }
        if (exemplar->parsed()) {
            input_path = exemplar_rows.empty() ? "<built-in>" : exemplar_rows;
            return run_exemplar(exemplar_rows, exemplar_out);
        }
    } catch (const onto::Error& e) {
        std::cerr << onto::format_diagnostic(input_path, e) << "\n";
        return 1;
    }
    return 2;
}
