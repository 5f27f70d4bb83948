#include <map>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cringlab/commands.hpp"
#include "cringlab/registry.hpp"

using namespace cringlab;

namespace {

struct Invocation {
    std::string document;
    std::vector<std::string> objects;
    std::string json_out;
    std::string field;
    std::size_t max_dim = 4;
    std::optional<std::uint64_t> seed;
    bool timing = false;
};

// "fixture:<name>" reads from the built-in registry instead of a file.
Document open_document(const std::string& where, std::optional<Field> field)
{
    const std::string prefix = "fixture:";
    if (where.rfind(prefix, 0) == 0) {
        Document doc = build_fixture(where.substr(prefix.size()));
        return field ? parse_document(emit(doc), where, field) : doc;
    }
    return load(where, field);
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

int run(const std::string& command, const Invocation& inv)
{
    std::optional<Field> field;
    if (!inv.field.empty()) field = Field::parse(inv.field);
    Document doc = open_document(inv.document, field);
    CommandOptions options{inv.max_dim, inv.seed};
    Report r = run_command(command, doc, inv.objects, options);
    if (inv.json_out == "-") {
        std::cout << r.to_json(inv.timing).dump(2) << "\n";
    }
    else {
        std::cout << r.text(inv.timing);
        if (!inv.json_out.empty()) write_file(inv.json_out, r.to_json(inv.timing).dump(2) + "\n");
    }
    return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations with corings, matrix C-rings and weak entwinings."};
    app.require_subcommand(1);

    const std::map<std::string, std::string> help = {
        {"check", "structural axioms of one object, or of every object"},
        {"cotensor", "cotensor product of two comodules"},
        {"build-cring", "C-ring of a context or of an entwining"},
        {"galois", "canonical map β of a module and the χ equivalences"},
        {"connection", "Galois connection between subcoideals and sub-C-rings"},
        {"we-check", "weak entwining axioms and invertibility"},
        {"kts", "self-injective Galois coextension pipeline"},
    };

    Invocation inv;
    std::string chosen;
    for (const auto& name : command_names()) {
        CLI::App* sub = app.add_subcommand(name, help.at(name));
        sub->add_option("document", inv.document, "JSON document, or fixture:<name>")->required();
        sub->add_option("objects", inv.objects, "object names");
        sub->add_option("--json", inv.json_out, "also write the report as JSON to a file ('-' for stdout only)");
        sub->add_option("--field", inv.field, "override the field: q or p:<prime>");
        sub->add_option("--max-dim", inv.max_dim, "enumeration limit for connection")->check(CLI::PositiveNumber);
        sub->add_option("--seed", inv.seed, "seed for sampled Frobenius forms");
        sub->add_flag("--timing", inv.timing, "include per-check timings");
        sub->callback([&chosen, name] { chosen = name; });
    }

    CLI::App* fixtures = app.add_subcommand("fixtures", "built-in example documents");
    fixtures->require_subcommand(1);
    CLI::App* list = fixtures->add_subcommand("list", "list the registered fixtures");
    CLI::App* emit_cmd = fixtures->add_subcommand("emit", "print a fixture as JSON");
    std::string fixture_name;
    std::string out_path;
    emit_cmd->add_option("name", fixture_name)->required();
    emit_cmd->add_option("--out", out_path, "write to a file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list->parsed()) {
            for (const auto& f : fixture_list()) std::cout << f.name << "\t" << f.summary << "\n";
            return 0;
        }
        if (emit_cmd->parsed()) {
            std::string text = emit(build_fixture(fixture_name));
            if (out_path.empty()) std::cout << text;
            else write_file(out_path, text);
            return 0;
        }
        return run(chosen, inv);
    }
    catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
    }
    catch (const UnknownReference& e) {
        std::cerr << "unknown reference: " << e.what() << "\n";
    }
    catch (const ShapeMismatch& e) {
        std::cerr << "shape mismatch: " << e.what() << "\n";
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
}
