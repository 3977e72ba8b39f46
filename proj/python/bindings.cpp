#include <sstream>

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cantor/cantor_function.hpp"
#include "cantor/cli.hpp"
#include "cantor/errors.hpp"
#include "cantor/measure.hpp"
#include "cantor/scale_calculus.hpp"
#include "cantor/sets.hpp"
#include "cantor/ultrametric.hpp"

namespace py = pybind11;
using namespace cantor;

namespace {

py::object big(const BigInt& n) {
    const std::string s = n.get_str();
    return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::object fraction(const Rational& q) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(big(q.numerator()), big(q.denominator()));
}

// int, Fraction or "a/b" string; floats are rejected to keep inputs exact.
Rational rational(const py::handle& obj) {
    if (py::isinstance<py::float_>(obj))
        throw py::type_error("exact input required: pass an int, fractions.Fraction or 'a/b' string");
    return Rational::parse(py::str(obj).cast<std::string>());
}

double to_float(const Real& x) { return x.convert_to<double>(); }

py::tuple interval(const Interval& iv) { return py::make_tuple(fraction(iv.lo), fraction(iv.hi)); }

py::list intervals(const std::vector<Interval>& ivs) {
    py::list out;
    for (const auto& iv : ivs) out.append(interval(iv));
    return out;
}

py::list fractions(const std::vector<Rational>& qs) {
    py::list out;
    for (const auto& q : qs) out.append(fraction(q));
    return out;
}

CylinderSet cylinder_set(const CantorSpec& spec, const std::vector<std::vector<int>>& prefixes) {
    return CylinderSet(spec, prefixes);
}

const char* kind_name(MembershipKind k) {
    switch (k) {
        case MembershipKind::InSet: return "in_set";
        case MembershipKind::Endpoint: return "endpoint";
        case MembershipKind::InGap: return "in_gap";
    }
    return "";
}

const char* branch_name(Branch b) {
    switch (b) {
        case Branch::Both: return "both";
        case Branch::RightOnly: return "right_only";
        case Branch::LeftOnly: return "left_only";
    }
    return "";
}

}  // namespace

PYBIND11_MODULE(_cantor, m) {
    m.doc() = "Exact arithmetic on generalized Cantor sets";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_OverflowError);

    py::class_<CantorSpec>(m, "CantorSpec")
        .def(py::init([](int r, std::vector<int> kept) { return CantorSpec(r, std::move(kept)); }), py::arg("r"),
             py::arg("kept_digits"))
        .def_static("middle_third", &CantorSpec::middle_third)
        .def_static("five_three", &CantorSpec::five_three)
        .def_static("four_outer", &CantorSpec::four_outer)
        .def_static("presets", &CantorSpec::presets)
        .def_property_readonly("r", &CantorSpec::r)
        .def_property_readonly("p", &CantorSpec::p)
        .def_property_readonly("q", &CantorSpec::q)
        .def_property_readonly("kept_digits",
                               [](const CantorSpec& s) {
                                   auto d = s.kept_digits();
                                   return std::vector<int>(d.begin(), d.end());
                               })
        .def("__eq__", [](const CantorSpec& a, const CantorSpec& b) { return a == b; })
        .def("__repr__", [](const CantorSpec& s) { return "CantorSpec" + s.str(); });

    m.def("level_intervals", [](const CantorSpec& s, int n) { return intervals(level_intervals(s, n)); },
          py::arg("spec"), py::arg("n"));
    m.def(
        "gap_intervals",
        [](const CantorSpec& s, int n, bool merged) {
            const auto g = gap_intervals(s, n);
            return intervals(merged ? g.merged : g.raw);
        },
        py::arg("spec"), py::arg("n"), py::arg("merged") = true);
    m.def("deleted_length", [](const CantorSpec& s, int n) { return fraction(deleted_length(s, n)); });
    m.def("hausdorff_dimension", [](const CantorSpec& s) { return to_float(hausdorff_dimension(s)); });
    m.def(
        "membership",
        [](py::handle x, const CantorSpec& s) {
            const auto mem = membership(rational(x), s);
            py::dict d;
            d["kind"] = kind_name(mem.kind);
            d["level"] = mem.level;
            d["gap"] = mem.gap ? py::object(interval(*mem.gap)) : py::none();
            return d;
        },
        py::arg("x"), py::arg("spec"));

    m.def("phi", [](py::handle x, const CantorSpec& s) { return fraction(phi(rational(x), s).value); },
          py::arg("x"), py::arg("spec"));
    m.def(
        "phi_staircase",
        [](const CantorSpec& s, int samples) {
            py::list out;
            for (const auto& [x, y] : phi_staircase(s, samples)) out.append(py::make_tuple(fraction(x), fraction(y)));
            return out;
        },
        py::arg("spec"), py::arg("samples"));
    m.def("endpoint_identity", [](const CantorSpec& s, int k) { return fractions(endpoint_identity(s, k)); });
    m.def("self_similarity_check",
          [](const CantorSpec& s, py::handle x) { return fractions(self_similarity_check(s, rational(x))); });

    m.def(
        "valuation", [](double x_tilde, double eps) { return to_float(valuation(Real(x_tilde), Real(eps)).value); },
        py::arg("x_tilde"), py::arg("eps"));
    m.def(
        "infinitesimal_from",
        [](py::handle x, py::handle eps, py::handle lambda) {
            return fraction(infinitesimal_from(rational(x), rational(eps), rational(lambda)).x_tilde);
        },
        py::arg("x"), py::arg("eps"), py::arg("lam"));
    m.def(
        "quantize_valuation",
        [](double v, const CantorSpec& s, int n) {
            Valuation raw;
            raw.value = Real(v);
            return fraction(quantize_valuation(raw, s, n).exact);
        },
        py::arg("v"), py::arg("spec"), py::arg("n"));
    m.def(
        "seminorm_check",
        [](double x, double y, double eps) { return seminorm_check(Real(x), Real(y), Real(eps)).holds; },
        py::arg("x_tilde"), py::arg("y_tilde"), py::arg("eps"));
    m.def(
        "multiplicative_neighbours",
        [](double x, double v) {
            const auto nb = multiplicative_neighbours(Real(x), Real(v));
            return py::make_tuple(to_float(nb.plus), to_float(nb.minus));
        },
        py::arg("x"), py::arg("v"));
    m.def("block_norm", [](const CantorSpec& s, int n) { return fraction(block_norm(s, n).exact); });
    m.def(
        "na_distance",
        [](py::handle x, py::handle y, const CantorSpec& s) {
            return fraction(na_distance(CantorPoint::of(rational(x), s), CantorPoint::of(rational(y), s), s).exact);
        },
        py::arg("x"), py::arg("y"), py::arg("spec"));

    m.def(
        "valued_measure",
        [](const CantorSpec& s, const std::vector<std::vector<int>>& prefixes) {
            return fraction(valued_measure(cylinder_set(s, prefixes)).exact);
        },
        py::arg("spec"), py::arg("prefixes"));
    m.def(
        "hausdorff_estimate",
        [](const CantorSpec& s, const std::vector<std::vector<int>>& prefixes, double exponent, int depth) {
            return to_float(hausdorff_estimate(cylinder_set(s, prefixes), Real(exponent), depth).value);
        },
        py::arg("spec"), py::arg("prefixes"), py::arg("exponent"), py::arg("depth"));
    m.def(
        "lebesgue_measure",
        [](const CantorSpec& s, const std::vector<std::vector<int>>& prefixes, int depth) {
            return fraction(lebesgue_measure(cylinder_set(s, prefixes), depth));
        },
        py::arg("spec"), py::arg("prefixes"), py::arg("depth"));

    m.def(
        "containing_interval",
        [](py::handle x, const CantorSpec& s, int k) {
            return interval(containing_interval(CantorPoint::of(rational(x), s), s, k));
        },
        py::arg("x"), py::arg("spec"), py::arg("k"));
    m.def(
        "scaling_identity",
        [](const CantorSpec& s, py::handle x, int k) {
            return fraction(scaling_identity(s, CantorPoint::of(rational(x), s), k));
        },
        py::arg("spec"), py::arg("x"), py::arg("k"));
    m.def(
        "phi_quotients",
        [](py::handle x, const CantorSpec& s, int depth) {
            const auto t = na_derivative([&](const CantorPoint& pt) { return phi_of_expansion(pt.expansion(), s); },
                                         CantorPoint::of(rational(x), s), s, depth);
            py::list out;
            for (const auto& step : t.steps) out.append(fraction(step.quotient));
            return out;
        },
        py::arg("x"), py::arg("spec"), py::arg("depth"));
    m.def(
        "log_limit_diagnostics",
        [](const CantorSpec& s, py::handle x, int k_max) {
            const auto diag = log_limit_diagnostics(s, CantorPoint::of(rational(x), s), k_max);
            py::list records;
            for (const auto& rec : diag.records) {
                py::dict d;
                d["k"] = rec.k;
                d["alpha"] = fraction(rec.alpha);
                d["beta"] = fraction(rec.beta);
                d["a_plus"] = fraction(rec.a_plus);
                d["a_minus"] = fraction(rec.a_minus);
                d["b_plus"] = fraction(rec.b_plus);
                d["b_minus"] = fraction(rec.b_minus);
                d["exact_residual"] = fraction(rec.exact_residual);
                d["log_residual"] = to_float(rec.log_residual);
                records.append(d);
            }
            py::dict out;
            out["branch"] = branch_name(diag.branch);
            out["records"] = records;
            return out;
        },
        py::arg("spec"), py::arg("x"), py::arg("k_max"));

    m.def(
        "verify",
        [](std::uint64_t seed, int depth, int samples) {
            cli::RunConfig config;
            config.verb = "verify";
            config.seed = seed;
            config.depth = depth;
            config.samples = samples;
            std::ostringstream out, err;
            const int code = cli::run(config, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("seed") = 1, py::arg("depth") = 0, py::arg("samples") = 0);
}
