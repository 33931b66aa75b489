#include <chrono>
#include <climits>
#include <cmath>
#include <sstream>

#include "otcert/action.hpp"
#include "otcert/certifier.hpp"
#include "otcert/cli.hpp"

namespace otcert::cli {

using nlohmann::json;

json number_json(const Interval& x) {
    const long r = x.radius_exponent2();
    json out{{"mid", x.mid().to_string(30)}};
    out["rad_log2"] = r == LONG_MIN / 4 ? json(nullptr) : json(r);
    return out;
}

json integer_json(const Integer& x) {
    if (x.fits_slong_p()) return json(x.get_si());
    return json(x.get_str());
}

namespace {

json complex_json(const ComplexInterval& z) { return {{"re", number_json(z.re)}, {"im", number_json(z.im)}}; }

json rational_json(const Rational& q) { return q.get_str(); }

json integers_json(const std::vector<Integer>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(integer_json(x));
    return out;
}

std::string coordinate_name(int j, int s) { return j < s ? "y" + std::to_string(j + 1) : "x" + std::to_string(j - s + 1); }

class Failure : public std::runtime_error {
   public:
    Failure(int code, const std::string& kind, const std::string& message)
        : std::runtime_error(message), code(code), kind(kind) {}
    int code;
    std::string kind;
};

FieldElement element_of(const NumberField& k, const std::vector<Integer>& coords) {
    std::vector<Rational> c;
    for (const auto& x : coords) c.emplace_back(x);
    if (static_cast<int>(c.size()) != k.degree())
        throw Failure(kInvalidDatum, "BadVector",
                      "vector has " + std::to_string(c.size()) + " coordinates, expected " + std::to_string(k.degree()));
    return k.element(std::move(c));
}

struct Job {
    std::optional<NumberField> field;
    std::vector<FieldElement> units;
    std::vector<FieldElement> hints;
    std::optional<DatumValidation> validation;
};

Job build(const JobSpec& spec, const Options& opt) {
    Job job;
    std::vector<Rational> coeffs;
    for (const auto& c : spec.polynomial) coeffs.emplace_back(c);
    try {
        job.field.emplace(RationalPoly(std::move(coeffs)));
    } catch (const InvalidField& e) {
        throw Failure(kInvalidDatum, "InvalidField", e.what());
    }
    for (const auto& u : spec.units) job.units.push_back(element_of(*job.field, u));
    for (const auto& h : spec.subfield_hints) job.hints.push_back(element_of(*job.field, h));
    DatumConfig cfg;
    cfg.precision_bits = opt.precision_bits;
    cfg.max_precision_bits = std::max<long>(1024, opt.precision_bits);
    cfg.tolerance = opt.tolerance;
    if (spec.real_order || spec.conjugate) {
        PlaceConvention conv = PlaceConvention::standard(signature(*job.field));
        if (spec.real_order) conv.real_order = *spec.real_order;
        if (spec.conjugate) conv.conjugate = *spec.conjugate;
        try {
            conv.validate(signature(*job.field));
        } catch (const std::invalid_argument& e) {
            throw Failure(kInvalidDatum, "InvalidConvention", e.what());
        }
        cfg.convention = std::move(conv);
    }
    job.validation = make_ot_datum(*job.field, job.units, cfg);
    return job;
}

json config_json(const Options& opt) {
    json c{{"precision_bits", opt.precision_bits}, {"exponent_bound", opt.exponent_bound},
           {"height_bound", opt.height_bound},     {"tolerance", opt.tolerance},
           {"seed", opt.seed}};
    c["word_bound"] = opt.word_bound ? json(*opt.word_bound) : json(nullptr);
    return c;
}

json input_json(const JobSpec& spec) {
    json in{{"name", spec.name}, {"polynomial", integers_json(spec.polynomial)}};
    in["units"] = json::array();
    for (const auto& u : spec.units) in["units"].push_back(integers_json(u));
    in["subfield_hints"] = json::array();
    for (const auto& h : spec.subfield_hints) in["subfield_hints"].push_back(integers_json(h));
    in["real_order"] = spec.real_order ? json(*spec.real_order) : json(nullptr);
    in["conjugate"] = spec.conjugate ? json(*spec.conjugate) : json(nullptr);
    return in;
}

json admissibility_json(const AdmissibilityEvidence& a) {
    json m = json::array();
    for (const auto& row : a.matrix) {
        json r = json::array();
        for (const auto& x : row) r.push_back(number_json(x));
        m.push_back(std::move(r));
    }
    json out{{"status", to_string(a.status)},
             {"matrix", std::move(m)},
             {"determinant", number_json(a.determinant)},
             {"certified_nonzero", a.certified_nonzero},
             {"precision_bits", a.precision_bits},
             {"tolerance", a.tolerance},
             {"detail", a.detail}};
    out["condition_number"] = std::isfinite(a.condition_number) ? json(a.condition_number) : json(nullptr);
    return out;
}

json datum_json(const Job& job) {
    const NumberField& k = *job.field;
    const DatumValidation& v = *job.validation;
    json out;
    out["order"] = OTDatum::order_descriptor();
    out["field"] = {{"polynomial", k.polynomial().to_string("X")},
                    {"degree", k.degree()},
                    {"irreducibility", {{"status", to_string(k.irreducibility().status)},
                                        {"evidence", k.irreducibility().evidence}}},
                    {"signature", {{"s", v.signature.s}, {"t", v.signature.t}}}};
    json units = json::array();
    for (std::size_t i = 0; i < v.generators.size(); ++i) {
        const GeneratorReport& g = v.generators[i];
        json u{{"index", i + 1},
               {"element", g.element.to_string()},
               {"unit", g.unit.unit},
               {"algebraic_integer", g.unit.algebraic_integer},
               {"in_order", g.unit.in_order},
               {"norm", rational_json(g.unit.norm)},
               {"reason", g.unit.reason},
               {"real_signs", g.real_signs},
               {"totally_positive", g.totally_positive}};
        RationalPoly mp = g.element.minimal_polynomial();
        u["minimal_polynomial"] = mp.to_string("X");
        u["minimal_polynomial_degree"] = mp.degree();
        u["primitive"] = mp.degree() == k.degree();
        units.push_back(std::move(u));
    }
    out["units"] = std::move(units);
    out["admissibility"] = v.admissibility ? admissibility_json(*v.admissibility) : json(nullptr);
    json issues = json::array();
    for (const auto& i : v.issues) {
        json e{{"kind", to_string(i.kind)}, {"message", i.message}};
        e["generator"] = i.generator >= 0 ? json(i.generator + 1) : json(nullptr);
        issues.push_back(std::move(e));
    }
    out["issues"] = std::move(issues);
    out["valid"] = v.ok();
    return out;
}

json witness_json(const Witness& w) {
    return {{"unit", w.unit.to_string()},
            {"exponents", w.exponents},
            {"minimal_polynomial", w.minimal_polynomial.to_string("X")},
            {"degree", w.minimal_polynomial.degree()},
            {"source", w.source}};
}

json candidate_json(const CandidateSubvariety& c, int s) {
    auto names = [&](const std::vector<int>& idx) {
        json out = json::array();
        for (int j : idx) out.push_back(coordinate_name(j, s));
        return out;
    };
    json blocks = json::array();
    for (const auto& b : c.coincidence_partition) blocks.push_back(names(b));
    json p0 = json::array();
    for (const auto& z : c.fixed_point) p0.push_back(complex_json(z));
    json dirs = json::array();
    for (const auto& d : c.directions) dirs.push_back(names(d));
    return {{"unit", c.unit.to_string()},
            {"translation", c.translation.to_string()},
            {"coincidence_partition", std::move(blocks)},
            {"free_coordinates", names(c.free_coordinates)},
            {"fixed_coordinates", names(c.fixed_coordinates)},
            {"fixed_point", std::move(p0)},
            {"directions", std::move(dirs)},
            {"identity_verified", c.identity_verified}};
}

json certificate_json(const Certificate& c, const OTDatum& datum) {
    json out{{"status", to_string(c.status)},
             {"evidence", c.evidence},
             {"prime_degree_shortcut", c.prime_degree_shortcut},
             {"simple_type", c.simple_type == SimpleType::Simple ? "simple" : "not simple"},
             {"generated_subfield_degree", c.generated_subfield_degree},
             {"exponent_bound", c.exponent_bound},
             {"height_bound", c.height_bound},
             {"precision_bits", c.precision_bits},
             {"notes", c.notes}};
    json prim = json::array();
    for (const auto& p : c.primitivity)
        prim.push_back({{"generator", p.generator + 1},
                        {"element", p.element.to_string()},
                        {"minimal_polynomial", p.minimal_polynomial.to_string("X")},
                        {"degree", p.minimal_polynomial.degree()},
                        {"primitive", p.primitive}});
    out["primitivity"] = std::move(prim);
    json subs = json::array();
    for (const auto& sf : c.subfields)
        subs.push_back({{"generator", sf.generator.to_string()},
                        {"minimal_polynomial", sf.minimal_polynomial.to_string("X")},
                        {"degree", sf.degree},
                        {"origin", sf.origin}});
    out["subfields"] = std::move(subs);
    json inter = json::array();
    for (const auto& r : c.intersections) {
        json e{{"subfield_degree", r.subfield_degree},
               {"result", r.kind == IntersectionResult::Kind::Witness ? "Witness" : "TrivialUpToBound"},
               {"exponent_bound", r.exponent_bound},
               {"lattice_used", r.lattice_used},
               {"lattice_candidates", r.lattice_candidates},
               {"scanned", r.scanned},
               {"warnings", r.warnings}};
        e["exponents"] = r.witness ? json(r.witness->exponents) : json(nullptr);
        inter.push_back(std::move(e));
    }
    out["intersections"] = std::move(inter);
    out["witness"] = c.witness ? witness_json(*c.witness) : json(nullptr);
    out["candidate_subvariety"] = nullptr;
    if (c.witness)
        out["candidate_subvariety"] =
            candidate_json(flat_subspace_witness(datum, c.witness->unit, datum.field().zero()), datum.signature().s);
    return out;
}

int certificate_exit(CertificateStatus s) {
    switch (s) {
        case CertificateStatus::CertifiedNoSubvarieties: return kCertified;
        case CertificateStatus::HypothesisRefuted: return kRefuted;
        case CertificateStatus::HeuristicallyCertified: return kHeuristic;
    }
    return kInternalFailure;
}

Point default_point(const OTDatum& d, const Options& opt, long prec) {
    const Signature sig = d.signature();
    std::vector<std::pair<double, double>> pts;
    if (opt.point) {
        pts = *opt.point;
        if (static_cast<int>(pts.size()) != sig.s + sig.t)
            throw Failure(kInvalidDatum, "BadPoint",
                          "point needs " + std::to_string(sig.s + sig.t) + " coordinates (y1..ys, x1..xt)");
    } else {
        for (int k = 0; k < sig.s; ++k) pts.emplace_back(0.0, 1.0);
        for (int j = 0; j < sig.t; ++j) pts.emplace_back(0.0, 0.0);
    }
    Point p;
    for (auto [re, im] : pts) p.push_back({Interval::point(BigFloat(prec, re)), Interval::point(BigFloat(prec, im))});
    return p;
}

std::string render_text(const json& r) {
    std::ostringstream out;
    out << "command: " << r.value("command", "") << "\n";
    if (r.contains("error")) out << "error: " << r["error"].value("kind", "") << ": " << r["error"].value("message", "") << "\n";
    if (r.contains("field")) {
        const auto& f = r["field"];
        out << "field: Q[X]/(" << f["polynomial"].get<std::string>() << "), degree " << f["degree"]
            << ", signature (s, t) = (" << f["signature"]["s"] << ", " << f["signature"]["t"] << "), "
            << f["irreducibility"]["status"].get<std::string>() << "\n";
        out << "order: " << r["order"].get<std::string>() << "\n";
    }
    if (r.contains("units")) {
        for (const auto& u : r["units"])
            out << "unit " << u["index"] << ": " << u["element"].get<std::string>() << "  norm " << u["norm"].get<std::string>()
                << "  unit=" << u["unit"] << "  totally_positive=" << u["totally_positive"]
                << "  minpoly degree " << u["minimal_polynomial_degree"] << (u["primitive"].get<bool>() ? " (primitive)" : " (not primitive)")
                << "\n";
    }
    if (r.contains("admissibility") && !r["admissibility"].is_null()) {
        const auto& a = r["admissibility"];
        out << "admissibility: " << a["status"].get<std::string>() << ", det = " << a["determinant"]["mid"].get<std::string>()
            << " (radius 2^" << a["determinant"]["rad_log2"] << ")\n";
        for (const auto& row : a["matrix"]) {
            out << "  ";
            for (const auto& x : row) out << " " << x["mid"].get<std::string>().substr(0, 20);
            out << "\n";
        }
    }
    if (r.contains("issues"))
        for (const auto& i : r["issues"]) out << "issue: " << i["kind"].get<std::string>() << ": " << i["message"].get<std::string>() << "\n";
    if (r.contains("certificate")) {
        const auto& c = r["certificate"];
        out << "status: " << c["status"].get<std::string>() << "\n";
        out << "evidence: " << c["evidence"].get<std::string>() << "\n";
        out << "simple type: " << c["simple_type"].get<std::string>() << "\n";
        for (const auto& sf : c["subfields"])
            out << "subfield: degree " << sf["degree"] << " generated by " << sf["generator"].get<std::string>() << " ("
                << sf["origin"].get<std::string>() << ")\n";
        if (!c["witness"].is_null())
            out << "witness: " << c["witness"]["unit"].get<std::string>() << ", minimal polynomial "
                << c["witness"]["minimal_polynomial"].get<std::string>() << "\n";
        for (const auto& n : c["notes"]) out << "note: " << n.get<std::string>() << "\n";
    }
    auto print_candidate = [&](const json& w) {
        out << "candidate subspace for u = " << w["unit"].get<std::string>() << ", a = " << w["translation"].get<std::string>()
            << "\n  coincidence partition:";
        for (const auto& b : w["coincidence_partition"]) out << " " << b.dump();
        out << "\n  free coordinates: " << w["free_coordinates"].dump() << "\n  fixed point:";
        for (const auto& z : w["fixed_point"])
            out << " (" << z["re"]["mid"].get<std::string>().substr(0, 12) << ", " << z["im"]["mid"].get<std::string>().substr(0, 12) << ")";
        out << "\n  identity verified: " << w["identity_verified"] << "\n";
    };
    if (r.contains("certificate") && !r["certificate"]["candidate_subvariety"].is_null())
        print_candidate(r["certificate"]["candidate_subvariety"]);
    if (r.contains("witness")) print_candidate(r["witness"]);
    if (r.contains("orbit")) {
        const auto& o = r["orbit"];
        out << "orbit: " << o["points"].size() << " points, " << o["duplicate_words"] << " duplicate words, min distance "
            << o["min_distance"].dump() << "\n";
    }
    if (r.contains("injectivity")) {
        const auto& i = r["injectivity"];
        out << "injectivity: samples " << i["samples"] << ", word bound " << i["word_bound"] << ", seed " << i["seed"]
            << "\n  false identifications " << i["false_identifications"] << ", constructed pairs identified "
            << i["constructed_identified"] << "/" << i["constructed_pairs"] << ", mechanism holds " << i["mechanism_holds"]
            << "\n  " << (i["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
    }
    out << "exit code: " << r["exit_code"] << "\n";
    return out.str();
}

RunResult finish(json report, int code, const Options& opt, std::chrono::steady_clock::time_point t0) {
    report["exit_code"] = code;
    if (opt.timings)
        report["timings"] = {{"total_ms", std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count()}};
    RunResult r{std::move(report), code, {}};
    r.text = render_text(r.report);
    return r;
}

json base_report(std::string_view command) { return {{"schema_version", kSchemaVersion}, {"tool", "otcert"}, {"command", command}}; }

}  // namespace

RunResult parse_failure(std::string_view command, const std::string& message, std::optional<ParseError> where) {
    json report = base_report(command);
    json err{{"kind", "ParseError"}, {"message", message}};
    if (where) {
        err["line"] = where->line;
        err["column"] = where->column;
    }
    report["error"] = std::move(err);
    return finish(std::move(report), kInvalidDatum, Options{}, std::chrono::steady_clock::now());
}

RunResult run(std::string_view command, const JobSpec& spec, const Options& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    json report = base_report(command);
    report["input"] = input_json(spec);
    report["config"] = config_json(opt);
    try {
        if (command != "analyze" && command != "certify" && command != "witness" && command != "orbit")
            throw Failure(kInvalidDatum, "UnknownCommand", "unknown command '" + std::string(command) + "'");
        Job job = build(spec, opt);
        report.update(datum_json(job));
        if (!job.validation->ok()) {
            report["status"] = "InvalidDatum";
            return finish(std::move(report), kInvalidDatum, opt, t0);
        }
        const OTDatum& datum = *job.validation->datum;
        if (command == "analyze") {
            report["status"] = "ValidDatum";
            return finish(std::move(report), kCertified, opt, t0);
        }
        if (command == "certify") {
            CertifierConfig cfg;
            cfg.exponent_bound = opt.exponent_bound;
            cfg.height_bound = opt.height_bound;
            cfg.precision_bits = opt.precision_bits;
            cfg.subfield_hints = job.hints;
            Certificate c = certify(datum, cfg);
            report["certificate"] = certificate_json(c, datum);
            report["status"] = to_string(c.status);
            return finish(std::move(report), certificate_exit(c.status), opt, t0);
        }
        if (command == "witness") {
            std::optional<FieldElement> u;
            if (opt.witness_generator) {
                const long k = *opt.witness_generator;
                if (k < 1 || k > static_cast<long>(datum.generators().size()))
                    throw Failure(kInvalidDatum, "BadGenerator", "generator index out of range");
                u = datum.generators()[static_cast<std::size_t>(k - 1)];
            } else if (opt.witness_element) {
                u = element_of(datum.field(), *opt.witness_element);
                if (!is_unit(*u).in_order) throw Failure(kInvalidDatum, "NotUnit", u->to_string() + " is not a unit of Z[theta]");
            } else {
                CertifierConfig cfg;
                cfg.exponent_bound = opt.exponent_bound;
                cfg.height_bound = opt.height_bound;
                cfg.precision_bits = opt.precision_bits;
                cfg.subfield_hints = job.hints;
                Certificate c = certify(datum, cfg);
                if (!c.witness)
                    throw Failure(kInvalidDatum, "NoWitness",
                                  std::string("no non-primitive unit found (") + to_string(c.status) + ")");
                u = c.witness->unit;
            }
            FieldElement a = opt.witness_translation ? element_of(datum.field(), *opt.witness_translation) : datum.field().zero();
            auto build_witness = [&]() {
                try {
                    return flat_subspace_witness(datum, *u, a);
                } catch (const NoFixedPoint& e) {
                    throw Failure(kInvalidDatum, "NoFixedPoint", e.what());
                } catch (const std::invalid_argument& e) {
                    throw Failure(kInvalidDatum, "PrimitiveUnit", e.what());
                }
            };
            const CandidateSubvariety w = build_witness();
            report["witness"] = candidate_json(w, datum.signature().s);
            report["status"] = w.identity_verified ? "WitnessVerified" : "WitnessUnverified";
            return finish(std::move(report), w.identity_verified ? kCertified : kInternalFailure, opt, t0);
        }
        // orbit
        OrbitConfig oc;
        oc.max_word_length = static_cast<int>(opt.word_bound.value_or(2));
        Point p = default_point(datum, opt, datum.embeddings().precision_bits());
        OrbitSample o;
        try {
            o = orbit_sample(datum, p, oc);
        } catch (const DomainError& e) {
            throw Failure(kInvalidDatum, "DomainError", e.what());
        } catch (const std::length_error& e) {
            throw Failure(kInvalidDatum, "TooManyWords", e.what());
        }
        json pts = json::array();
        for (const auto& q : o.points) {
            json row = json::array();
            for (const auto& z : q) row.push_back(complex_json(z));
            pts.push_back(std::move(row));
        }
        report["orbit"] = {{"word_bound", oc.max_word_length},
                           {"points", std::move(pts)},
                           {"duplicate_words", o.duplicate_words}};
        report["orbit"]["min_distance"] = o.min_distance ? json(*o.min_distance) : json(nullptr);
        report["status"] = "OrbitSampled";
        return finish(std::move(report), kCertified, opt, t0);
    } catch (const Failure& f) {
        report["error"] = {{"kind", f.kind}, {"message", f.what()}};
        report["status"] = f.code == kInvalidDatum ? "InvalidDatum" : "InternalFailure";
        return finish(std::move(report), f.code, opt, t0);
    } catch (const ReducibleField& e) {
        report["error"] = {{"kind", "ReducibleField"}, {"message", e.what()}};
        report["status"] = "InvalidDatum";
        return finish(std::move(report), kInvalidDatum, opt, t0);
    } catch (const std::exception& e) {
        report["error"] = {{"kind", "InternalFailure"}, {"message", e.what()}};
        report["status"] = "InternalFailure";
        return finish(std::move(report), kInternalFailure, opt, t0);
    }
}

RunResult run_injectivity(const Options& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    json report = base_report("example injectivity");
    report["config"] = config_json(opt);
    try {
        auto datum_of = [&](const char* name) {
            Job job = build(*builtin_example(name), opt);
            if (!job.validation->ok()) throw Failure(kInternalFailure, "BuiltinRejected", std::string(name) + " was rejected");
            return *job.validation->datum;
        };
        OTDatum small = datum_of("inoue"), large = datum_of("ot6");
        const int bound = static_cast<int>(opt.word_bound.value_or(3));
        InjectivityReport r = example32_injectivity(small, large, opt.samples, bound, opt.seed);
        report["injectivity"] = {{"samples", r.samples},
                                 {"word_bound", r.word_bound},
                                 {"seed", r.seed},
                                 {"words_small", r.words_small},
                                 {"words_large", r.words_large},
                                 {"equivalent_random_pairs", r.equivalent_random_pairs},
                                 {"false_identifications", r.false_identifications},
                                 {"constructed_pairs", r.constructed_pairs},
                                 {"constructed_identified", r.constructed_identified},
                                 {"mechanism_holds", r.mechanism_holds},
                                 {"identity_pair_identified", r.identity_pair_identified},
                                 {"passed", r.passed()}};
        report["status"] = r.passed() ? "InjectivityConsistent" : "InjectivityViolated";
        return finish(std::move(report), r.passed() ? kCertified : kRefuted, opt, t0);
    } catch (const std::exception& e) {
        report["error"] = {{"kind", "InternalFailure"}, {"message", e.what()}};
        report["status"] = "InternalFailure";
        return finish(std::move(report), kInternalFailure, opt, t0);
    }
}

}  // namespace otcert::cli
