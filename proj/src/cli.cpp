#include "cantor/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <json.hpp>

#include "cantor/cantor_function.hpp"
#include "cantor/errors.hpp"
#include "cantor/measure.hpp"
#include "cantor/sampling.hpp"
#include "cantor/scale_calculus.hpp"
#include "cantor/sets.hpp"
#include "cantor/ultrametric.hpp"

namespace cantor::cli {

using json = nlohmann::ordered_json;
namespace bmp = boost::multiprecision;

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json spec_json(const CantorSpec& spec) {
    return {{"r", spec.r()}, {"kept_digits", std::vector<int>(spec.kept_digits().begin(), spec.kept_digits().end())}};
}

json real_json(const Real& x) { return x.convert_to<double>(); }

Real parse_real(const std::string& text, const char* name) {
    if (text.empty()) throw UsageError(std::string("missing --") + name);
    try {
        if (text.find('/') != std::string::npos) return to_real(Rational::parse(text));
        return Real(text);
    } catch (const std::exception&) {
        throw UsageError(std::string("cannot parse --") + name + " value '" + text + "'");
    }
}

std::string format_or(const RunConfig& c, const std::string& fallback, std::initializer_list<const char*> allowed) {
    std::string f = c.format.empty() ? fallback : c.format;
    for (const char* a : allowed)
        if (f == a) return f;
    throw UsageError("format '" + f + "' is not supported by verb '" + c.verb + "'");
}

// ---------------------------------------------------------------- set

void interval_rows(std::ostream& os, int level, const std::vector<Interval>& ivs) {
    for (std::size_t i = 0; i < ivs.size(); ++i) {
        const auto& iv = ivs[i];
        os << level << ',' << i << ',' << iv.lo.numerator().get_str() << ',' << iv.lo.denominator().get_str() << ','
           << iv.hi.numerator().get_str() << ',' << iv.hi.denominator().get_str() << '\n';
    }
}

int verb_set(const RunConfig& c, const CantorSpec& spec, std::ostream& os) {
    const std::string fmt = format_or(c, "csv", {"csv", "json"});
    if (c.gaps != "none" && c.gaps != "raw" && c.gaps != "merged") throw UsageError("--gaps must be none|raw|merged");
    std::vector<Interval> ivs;
    if (c.gaps == "none") ivs = level_intervals(spec, c.level);
    else {
        auto report = gap_intervals(spec, c.level);
        ivs = c.gaps == "raw" ? report.raw : report.merged;
    }
    if (fmt == "csv") {
        os << "level,index,lo_num,lo_den,hi_num,hi_den\n";
        interval_rows(os, c.level, ivs);
        return kOk;
    }
    json rows = json::array();
    for (const auto& iv : ivs) rows.push_back({{"lo", iv.lo.str()}, {"hi", iv.hi.str()}});
    json doc{{"schema_version", kSchemaVersion}, {"spec", spec_json(spec)}, {"level", c.level}, {"gaps", c.gaps},
             {"intervals", rows}};
    if (c.level > 0) doc["deleted_length"] = deleted_length(spec, c.level).str();
    os << doc.dump(2) << '\n';
    return kOk;
}

// ---------------------------------------------------------------- phi

void staircase_svg(std::ostream& os, const std::vector<std::pair<Rational, Rational>>& points) {
    constexpr double width = 800, height = 600, margin = 40;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n"
       << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
    std::ostringstream pts;
    pts.precision(6);
    pts << std::fixed;
    for (std::size_t i = 0; i < points.size(); ++i) {
        double px = margin + points[i].first.to_double() * (width - 2 * margin);
        double py = height - margin - points[i].second.to_double() * (height - 2 * margin);
        if (i) pts << ' ';
        pts << px << ',' << py;
    }
    os << pts.str() << "\"/>\n</svg>\n";
}

int verb_phi(const RunConfig& c, const CantorSpec& spec, std::ostream& os) {
    const std::string fmt = format_or(c, "csv", {"csv", "svg", "json"});
    const auto points = phi_staircase(spec, c.samples > 0 ? c.samples : 1025);
    if (fmt == "svg") {
        staircase_svg(os, points);
    } else if (fmt == "csv") {
        os << "x_num,x_den,phi_num,phi_den,phi_float\n";
        for (const auto& [x, y] : points) {
            os << x.numerator().get_str() << ',' << x.denominator().get_str() << ',' << y.numerator().get_str() << ','
               << y.denominator().get_str() << ',' << y.to_decimal(17) << '\n';
        }
    } else {
        json rows = json::array();
        for (const auto& [x, y] : points) rows.push_back({{"x", x.str()}, {"phi", y.str()}});
        os << json{{"schema_version", kSchemaVersion}, {"spec", spec_json(spec)}, {"staircase", rows}}.dump(2) << '\n';
    }
    return kOk;
}

// ---------------------------------------------------------------- dim

int verb_dim(const RunConfig& c, const CantorSpec& spec, std::ostream& os) {
    format_or(c, "json", {"json"});
    const Real s = hausdorff_dimension(spec);
    json doc{{"schema_version", kSchemaVersion},
             {"spec", spec_json(spec)},
             {"p", spec.p()},
             {"q", spec.q()},
             {"s", real_json(s)},
             {"s_digits", to_string(s, 40)}};
    os << doc.dump(2) << '\n';
    return kOk;
}

// ---------------------------------------------------------------- measure

CylinderSet parse_cylinders(const std::string& text, const CantorSpec& spec) {
    if (text.empty() || text == "C") return CylinderSet::whole(spec);
    std::vector<std::vector<int>> prefixes;
    std::stringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ';')) {
        std::vector<int> prefix;
        std::stringstream digits(group);
        std::string d;
        while (std::getline(digits, d, ',')) {
            if (d.empty()) continue;
            try {
                prefix.push_back(std::stoi(d));
            } catch (const std::exception&) {
                throw UsageError("bad cylinder digit '" + d + "'");
            }
        }
        prefixes.push_back(std::move(prefix));
    }
    return CylinderSet(spec, std::move(prefixes));
}

int verb_measure(const RunConfig& c, const CantorSpec& spec, std::ostream& os) {
    const std::string fmt = format_or(c, "json", {"json", "csv"});
    const CylinderSet e = parse_cylinders(c.cylinders, spec);
    const int depth = c.depth > 0 ? c.depth : std::max(8, e.max_level());
    const Real s = hausdorff_dimension(spec);
    std::vector<Real> exponents{s - Real(0.1), s, s + Real(0.1)};
    if (c.exponent) exponents.push_back(parse_real(*c.exponent, "exponent"));

    json table = json::array();
    for (int d = e.max_level(); d <= depth; ++d) {
        for (const auto& x : exponents) {
            if (!(x > 0 && x <= 1)) throw UsageError("exponent must lie in (0,1]");
            const auto est = hausdorff_estimate(e, x, d);
            table.push_back({{"depth", d}, {"exponent", real_json(x)}, {"value", real_json(est.value)}});
        }
    }
    if (fmt == "csv") {
        os << "depth,exponent,value\n";
        os.precision(17);
        for (const auto& row : table) {
            os << row["depth"].get<int>() << ',' << row["exponent"].get<double>() << ',' << row["value"].get<double>()
               << '\n';
        }
        return kOk;
    }
    const auto valued = valued_measure(e);
    json doc{{"schema_version", kSchemaVersion},
             {"spec", spec_json(spec)},
             {"set_description", e.describe()},
             {"valued_exact", valued.exact.str()},
             {"lebesgue_upper", lebesgue_measure(e, depth).str()},
             {"hausdorff_at_dimension", hausdorff_estimate_at_dimension(e, depth).exact.str()},
             {"hausdorff_table", table}};
    os << doc.dump(2) << '\n';
    return kOk;
}

// ---------------------------------------------------------------- valuation

int verb_valuation(const RunConfig& c, const CantorSpec& spec, std::ostream& os) {
    format_or(c, "json", {"json"});
    const Real eps = parse_real(c.epsilon, "epsilon");
    json input{{"epsilon", c.epsilon}};
    Real x_tilde;
    if (!c.x_tilde.empty()) {
        x_tilde = parse_real(c.x_tilde, "x-tilde");
        input["x_tilde"] = c.x_tilde;
    } else {
        const Real anchor = parse_real(c.anchor, "anchor");
        const Real lambda = c.lambda.empty() ? Real(1) : parse_real(c.lambda, "lambda");
        x_tilde = infinitesimal_from(anchor, eps, lambda).x_tilde;
        input["anchor"] = c.anchor;
        input["lambda"] = c.lambda.empty() ? "1" : c.lambda;
        input["x_tilde"] = to_string(x_tilde, 40);
    }
    const Valuation raw = valuation(x_tilde, eps);
    const Valuation canon = quantize_valuation(raw, spec, c.level);
    json doc{{"schema_version", kSchemaVersion},
             {"spec", spec_json(spec)},
             {"input", input},
             {"value", real_json(raw.value)},
             {"value_digits", to_string(raw.value, 40)},
             {"canonical",
              {{"alpha", canon.alpha.get_str()}, {"p", canon.p}, {"level", canon.s0}, {"exact", canon.exact.str()},
               {"value", real_json(canon.value)}}},
             {"quantization_error", real_json(canon.quantization_error)}};
    os << doc.dump(2) << '\n';
    return kOk;
}

// ---------------------------------------------------------------- verify

struct Suite {
    std::string name;
    std::string spec;
    long checks = 0;
    long failures = 0;
    json counterexample;

    void check(bool ok, const std::function<json()>& witness) {
        ++checks;
        if (ok) return;
        if (failures++ == 0) counterexample = witness();
    }
    json to_json() const {
        json j{{"name", name}, {"spec", spec}, {"checks", checks}, {"failures", failures}, {"pass", failures == 0}};
        if (failures) j["counterexample"] = counterexample;
        return j;
    }
};

std::vector<Suite> verify_spec(const CantorSpec& spec, int depth, int samples, Rng& rng) {
    std::vector<Suite> suites;
    auto add = [&](const std::string& name) -> Suite& {
        suites.push_back({name, spec.str()});
        return suites.back();
    };
    const Rational ratio(spec.p(), spec.r());

    {
        Suite& s = add("deleted_length");
        Rational sum(0);
        for (int n = 1; n <= 20; ++n) {
            sum += Rational(spec.q(), spec.p()) * pow(ratio, n);
            const Rational got = deleted_length(spec, n);
            s.check(got == sum && got == Rational(1) - pow(ratio, n),
                    [&] { return json{{"n", n}, {"got", got.str()}, {"expected", sum.str()}}; });
        }
    }
    {
        Suite& s = add("level_structure");
        const auto maps = ifs_maps(spec);
        for (int n = 1; n <= std::min(depth, 6); ++n) {
            const auto prev = level_intervals(spec, n - 1);
            const auto cur = level_intervals(spec, n);
            const auto gaps = gap_intervals(spec, n);
            Rational total(0);
            for (const auto& iv : cur) {
                total += iv.length();
                s.check(iv.length() == pow(Rational(spec.r()), -n),
                        [&] { return json{{"n", n}, {"lo", iv.lo.str()}, {"hi", iv.hi.str()}}; });
            }
            for (const auto& g : gaps.merged) total += g.length();
            s.check(total == Rational(1), [&] { return json{{"n", n}, {"total", total.str()}}; });
            std::vector<Interval> image;
            for (const auto& m : maps)
                for (const auto& iv : prev) image.push_back(m(iv));
            std::sort(image.begin(), image.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
            s.check(image == cur, [&] { return json{{"n", n}, {"issue", "IFS image differs from next level"}}; });
        }
    }
    {
        Suite& s = add("endpoint_identity");
        for (int k = 1; k <= std::min(depth, 8); ++k) {
            const auto residuals = endpoint_identity(spec, k);
            for (std::size_t i = 0; i < residuals.size(); ++i)
                s.check(residuals[i].is_zero(),
                        [&] { return json{{"k", k}, {"index", i}, {"residual", residuals[i].str()}}; });
        }
    }
    {
        Suite& s = add("self_similarity");
        for (int i = 0; i < samples; ++i) {
            const Rational x = random_unit_rational(rng);
            for (const auto& res : self_similarity_check(spec, x))
                s.check(res.is_zero(), [&] { return json{{"x", x.str()}, {"residual", res.str()}}; });
        }
    }
    {
        Suite& s = add("scaling_identity");
        for (int i = 0; i < samples; ++i) {
            const CantorPoint x = random_point(rng, spec);
            for (int k = 1; k <= 12; ++k) {
                const Rational res = scaling_identity(spec, x, k);
                s.check(res.is_zero(), [&] { return json{{"x", x.value().str()}, {"k", k}, {"residual", res.str()}}; });
            }
        }
    }
    {
        Suite& s = add("strong_triangle");
        for (int i = 0; i < samples; ++i) {
            const CantorPoint a = random_point(rng, spec), b = random_point(rng, spec), c = random_point(rng, spec);
            const auto ac = na_distance(a, c, spec).exact;
            const auto ab = na_distance(a, b, spec).exact;
            const auto bc = na_distance(b, c, spec).exact;
            s.check(ac <= std::max(ab, bc), [&] {
                return json{{"x", a.value().str()}, {"y", b.value().str()}, {"z", c.value().str()}};
            });
        }
    }
    {
        Suite& s = add("seminorm");
        std::uniform_real_distribution<double> unit(1e-6, 1.0);
        for (const Real eps : {Real(1e-3), Real(1e-6)}) {
            for (int i = 0; i < samples; ++i) {
                const Real x = eps * Real(unit(rng)) / 2, y = eps * Real(unit(rng)) / 2;
                const auto report = seminorm_check(x, y, eps);
                s.check(report.holds, [&] {
                    return json{{"x_tilde", to_string(x)}, {"y_tilde", to_string(y)}, {"epsilon", to_string(eps)}};
                });
            }
        }
    }
    {
        Suite& s = add("measure");
        for (int n = 0; n <= std::min(depth, 8); ++n) {
            Rational total(0);
            for (const auto& cyl : level_cylinders(spec, n)) total += valued_measure(CylinderSet(spec, {cyl.prefix()})).exact;
            s.check(total == Rational(1), [&] { return json{{"n", n}, {"total", total.str()}}; });
        }
        for (int i = 0; i < samples; ++i) {
            const CylinderSet e = random_cylinder_set(rng, spec, 4, 5);
            const auto v = valued_measure(e).exact;
            for (int d = e.max_level(); d <= e.max_level() + 2; ++d) {
                const auto h = hausdorff_estimate_at_dimension(e, d).exact;
                s.check(h == v, [&] { return json{{"set", e.describe()}, {"depth", d}, {"valued", v.str()}, {"hausdorff", h.str()}}; });
            }
        }
    }
    {
        Suite& s = add("log_limit_aggregate");
        for (int i = 0; i < samples; ++i) {
            const CantorPoint x = random_point(rng, spec);
            const auto diag = log_limit_diagnostics(spec, x, 12);
            for (const auto& rec : diag.records) {
                s.check(rec.exact_residual.is_zero() && bmp::abs(rec.log_residual) <= Real(1e-12),
                        [&] { return json{{"x", x.value().str()}, {"k", rec.k}, {"residual", rec.exact_residual.str()}}; });
            }
        }
    }
    {
        Suite& s = add("identity_quotient");
        for (int i = 0; i < samples; ++i) {
            const CantorPoint x = random_point(rng, spec);
            const auto trace = na_derivative_c2c([](const CantorPoint& p) { return p; }, x, spec, std::max(depth, 1));
            for (const auto& step : trace.steps)
                s.check(step.quotient == Rational(1), [&] { return json{{"x0", x.value().str()}, {"x", step.x.value().str()}}; });
        }
    }
    return suites;
}

int verb_verify(const RunConfig& c, const std::vector<CantorSpec>& specs, std::ostream& os, std::ostream& err) {
    format_or(c, "json", {"json"});
    Rng rng(c.seed);
    const int depth = c.depth > 0 ? c.depth : 8;
    const int samples = c.samples > 0 ? c.samples : 200;
    json suites = json::array();
    bool pass = true;
    for (const auto& spec : specs) {
        for (const auto& suite : verify_spec(spec, depth, samples, rng)) {
            pass = pass && suite.failures == 0;
            if (suite.failures) err << "FAIL " << suite.name << " on " << suite.spec << ": " << suite.counterexample.dump() << '\n';
            suites.push_back(suite.to_json());
        }
    }
    json doc{{"schema_version", kSchemaVersion}, {"seed", c.seed}, {"depth", depth}, {"samples", samples},
             {"suites", suites}, {"pass", pass}};
    os << doc.dump(2) << '\n';
    return pass ? kOk : kAssertionFailed;
}

// ---------------------------------------------------------------- diagnose

std::string opt_str(const std::optional<Rational>& r) { return r ? r->to_decimal(17) : ""; }

int verb_diagnose(const RunConfig& c, const CantorSpec& spec, std::ostream& os) {
    const std::string fmt = format_or(c, "csv", {"csv", "json"});
    Rng rng(c.seed);
    const CantorPoint x = c.x.empty() ? random_point(rng, spec) : CantorPoint::of(Rational::parse(c.x), spec);
    const int k_max = c.depth > 0 ? c.depth : 12;
    const auto diag = log_limit_diagnostics(spec, x, k_max);
    const char* branch = diag.branch == Branch::Both ? "both" : (diag.branch == Branch::RightOnly ? "right" : "left");
    if (fmt == "csv") {
        os << "k,alpha,beta,a_plus,a_minus,b_plus,b_minus,ratio_plus,ratio_minus,exact_residual,log_residual\n";
        for (const auto& rec : diag.records) {
            os << rec.k << ',' << rec.alpha.str() << ',' << rec.beta.str() << ',' << rec.a_plus.str() << ','
               << rec.a_minus.str() << ',' << rec.b_plus.str() << ',' << rec.b_minus.str() << ','
               << opt_str(rec.ratio_plus) << ',' << opt_str(rec.ratio_minus) << ',' << rec.exact_residual.str() << ','
               << to_string(rec.log_residual, 6) << '\n';
        }
        return kOk;
    }
    json rows = json::array();
    for (const auto& rec : diag.records) {
        rows.push_back({{"k", rec.k}, {"alpha", rec.alpha.str()}, {"beta", rec.beta.str()},
                        {"ratio_plus", rec.ratio_plus ? json(rec.ratio_plus->str()) : json(nullptr)},
                        {"ratio_minus", rec.ratio_minus ? json(rec.ratio_minus->str()) : json(nullptr)},
                        {"exact_residual", rec.exact_residual.str()}});
    }
    json doc{{"schema_version", kSchemaVersion}, {"spec", spec_json(spec)}, {"x", x.value().str()},
             {"branch", branch}, {"records", rows}};
    doc["ratio_plus_limit"] = diag.ratio_plus_limit ? json(diag.ratio_plus_limit->str()) : json(nullptr);
    doc["ratio_minus_limit"] = diag.ratio_minus_limit ? json(diag.ratio_minus_limit->str()) : json(nullptr);
    os << doc.dump(2) << '\n';
    return kOk;
}

int dispatch(const RunConfig& c, std::ostream& os, std::ostream& err) {
    const auto specs = resolve_specs(c);
    if (c.verb == "verify") return verb_verify(c, specs, os, err);
    const CantorSpec& spec = specs.front();
    if (c.verb == "set") return verb_set(c, spec, os);
    if (c.verb == "phi") return verb_phi(c, spec, os);
    if (c.verb == "dim") return verb_dim(c, spec, os);
    if (c.verb == "measure") return verb_measure(c, spec, os);
    if (c.verb == "valuation") return verb_valuation(c, spec, os);
    if (c.verb == "diagnose") return verb_diagnose(c, spec, os);
    throw UsageError("unknown verb '" + c.verb + "'");
}

}  // namespace

CantorSpec parse_spec_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
        return CantorSpec(doc.at("r").get<int>(), doc.at("kept_digits").get<std::vector<int>>());
    } catch (const json::exception& e) {
        throw DomainError(std::string("invalid spec JSON: ") + e.what());
    }
}

std::vector<CantorSpec> resolve_specs(const RunConfig& config) {
    if (config.spec_file) {
        std::ifstream in(*config.spec_file);
        if (!in) throw UsageError("cannot read spec file " + *config.spec_file);
        std::stringstream buf;
        buf << in.rdbuf();
        return {parse_spec_json(buf.str())};
    }
    if (config.r) return {CantorSpec(*config.r, config.digits)};
    if (config.verb == "verify") return CantorSpec::presets();
    return {CantorSpec::middle_third()};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.out.empty()) return dispatch(config, out, err);
        std::ostringstream buffer;
        const int status = dispatch(config, buffer, err);
        std::ofstream file(config.out, std::ios::binary);
        if (!file) throw UsageError("cannot write " + config.out);
        file << buffer.str();
        return status;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

}  // namespace cantor::cli
