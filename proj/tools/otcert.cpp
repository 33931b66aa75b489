#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "otcert/cli.hpp"

using namespace otcert;
using namespace otcert::cli;

namespace {

std::vector<Integer> integer_vector(const std::string& text) {
    auto v = nlohmann::json::parse(text);
    if (!v.is_array()) throw std::invalid_argument("expected a JSON array of integers");
    std::vector<Integer> out;
    for (const auto& x : v) {
        if (x.is_number_integer())
            out.emplace_back(std::to_string(x.get<long long>()));
        else if (x.is_string())
            out.emplace_back(x.get<std::string>());
        else
            throw std::invalid_argument("expected integers in " + text);
    }
    return out;
}

std::vector<std::pair<double, double>> point_vector(const std::string& text) {
    auto v = nlohmann::json::parse(text);
    std::vector<std::pair<double, double>> out;
    for (const auto& z : v) {
        if (!z.is_array() || z.size() != 2) throw std::invalid_argument("point coordinates are [re, im] pairs");
        out.emplace_back(z[0].get<double>(), z[1].get<double>());
    }
    return out;
}

int emit(const RunResult& r, bool json) {
    if (json)
        std::cout << r.report.dump(2) << "\n";
    else
        std::cout << r.text;
    return r.exit_code;
}

std::string read_source(const std::string& path) {
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Oeljeklaus-Toma data: validation, subvariety certificates and witnesses", "otcert"};
    app.require_subcommand(1);
    app.fallthrough();

    Overrides ov;
    bool json_flag = false, timings = false;
    long samples = 100;
    app.add_option("--precision-bits", ov.precision_bits, "working precision in bits")
        ->envname("OTCERT_PRECISION_BITS")
        ->check(CLI::Range(64L, 65536L));
    app.add_option("--exponent-bound", ov.exponent_bound, "bound on |m_k| in the unit search")
        ->envname("OTCERT_EXPONENT_BOUND")
        ->check(CLI::Range(0L, 1000L));
    app.add_option("--height-bound", ov.height_bound, "coefficient bound for the subfield search")
        ->envname("OTCERT_HEIGHT_BOUND")
        ->check(CLI::Range(0L, 100L));
    app.add_option("--tolerance", ov.tolerance, "singularity tolerance for the admissibility test")
        ->envname("OTCERT_TOLERANCE")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", ov.seed, "random seed")->envname("OTCERT_SEED");
    app.add_option("--word-bound", ov.word_bound, "maximal word length for orbit sampling")
        ->envname("OTCERT_WORD_BOUND")
        ->check(CLI::Range(0L, 64L));
    app.add_flag("--json", json_flag, "print the JSON report")->envname("OTCERT_JSON");
    app.add_flag("--timings", timings, "include timings in the report");
    app.add_option("--samples", samples, "sample count for the injectivity check")->check(CLI::Range(1L, 100000L));

    const std::string source_help = "FILE ('-' for stdin) or 'example NAME'";
    std::vector<std::string> source;
    std::map<std::string, CLI::App*> job_commands;
    for (const char* name : {"analyze", "certify", "witness", "orbit"}) {
        static const std::map<std::string, std::string> help{
            {"analyze", "validate a datum and report units and admissibility"},
            {"certify", "certify or refute primitivity of every nontrivial unit"},
            {"witness", "build the candidate flat subspace for a non-primitive unit"},
            {"orbit", "sample the orbit of a point under short words"}};
        CLI::App* sub = app.add_subcommand(name, help.at(name));
        sub->add_option("source", source, source_help)->required()->expected(1, 2);
        job_commands[name] = sub;
    }
    long generator = 0;
    std::string element, translation, point;
    job_commands["witness"]->add_option("--generator", generator, "1-based generator index");
    job_commands["witness"]->add_option("--element", element, "unit as a JSON coordinate array");
    job_commands["witness"]->add_option("--translation", translation, "translation as a JSON coordinate array");
    job_commands["orbit"]->add_option("--point", point, "JSON list of [re, im] pairs (y1..ys, x1..xt)");

    std::string example_name;
    CLI::App* example = app.add_subcommand("example", "built-in examples: list, inoue, ot6, injectivity");
    example->add_option("name", example_name, "example name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kInvalidDatum;
    }

    Options base;
    base.timings = timings;
    base.samples = samples;
    const bool want_json = ov.json.value_or(json_flag);

    if (example->parsed()) {
        if (example_name == "list") {
            for (const auto& n : builtin_example_names()) std::cout << n << "  " << builtin_example_summary(n) << "\n";
            std::cout << "injectivity  random spot check of the map between the inoue and ot6 quotients\n";
            return 0;
        }
        if (example_name == "injectivity") {
            Options opt = resolve_options(JobSpec{}, ov, base);
            opt.json = opt.json || json_flag;
            return emit(run_injectivity(opt), opt.json);
        }
        auto spec = builtin_example(example_name);
        if (!spec) {
            std::cerr << "unknown example '" << example_name << "'; try 'otcert example list'\n";
            return kInvalidDatum;
        }
        std::cout << render_jobspec(*spec);
        return 0;
    }

    std::string command;
    for (const auto& [name, sub] : job_commands)
        if (sub->parsed()) command = name;

    JobSpec spec;
    try {
        if (source.size() == 2) {
            if (source[0] != "example") throw std::invalid_argument("expected FILE or 'example NAME'");
            auto b = builtin_example(source[1]);
            if (!b) throw std::invalid_argument("unknown example '" + source[1] + "'");
            spec = *b;
        } else {
            spec = parse_jobspec(read_source(source[0]));
        }
    } catch (const ParseError& e) {
        return emit(parse_failure(command, e.what(), e), want_json);
    } catch (const std::exception& e) {
        return emit(parse_failure(command, e.what(), std::nullopt), want_json);
    }

    Options opt = resolve_options(spec, ov, base);
    opt.json = opt.json || json_flag;
    try {
        if (generator != 0) opt.witness_generator = generator;
        if (!element.empty()) opt.witness_element = integer_vector(element);
        if (!translation.empty()) opt.witness_translation = integer_vector(translation);
        if (!point.empty()) opt.point = point_vector(point);
    } catch (const std::exception& e) {
        return emit(parse_failure(command, e.what(), std::nullopt), opt.json);
    }
    return emit(run(command, spec, opt), opt.json);
}
