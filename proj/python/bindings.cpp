#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hnzz/affine.hpp"
#include "hnzz/error.hpp"
#include "hnzz/generate.hpp"
#include "hnzz/io.hpp"
#include "hnzz/verify.hpp"
#include "hnzz/zigzag.hpp"

namespace py = pybind11;
using namespace hnzz;

namespace {

using Bars = std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>;
using Steps = std::vector<std::pair<std::string, std::vector<std::size_t>>>;

Field field_from(const std::string& spec) {
  if (spec == "Q" || spec == "q") return Field::rational();
  std::size_t used = 0;
  unsigned long p = 0;
  try {
    p = std::stoul(spec, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != spec.size() || p > 0x7fffffffu || !is_prime_number(p))
    throw InvalidArgument("field must be \"Q\" or a prime, got \"" + spec + "\"");
  return Field::prime(static_cast<std::uint32_t>(p));
}

std::string field_name(const Field& f) { return f.is_rational() ? "Q" : std::to_string(f.modulus()); }

AffineQuiver affine_from(const std::vector<int>& orientation) {
  std::vector<Orientation> o;
  for (int b : orientation) {
    if (b != 0 && b != 1) throw InvalidArgument("orientation entries must be 0 (cw) or 1 (ccw)");
    o.push_back(b == 0 ? Orientation::cw : Orientation::ccw);
  }
  const std::size_t n = o.size();
  return AffineQuiver(n, std::move(o));
}

Bars bars(const Barcode& b) {
  Bars out;
  for (const auto& [i, m] : b) out.emplace_back(i.lo, i.hi, m);
  return out;
}

Steps steps(const HNReport& r) {
  Steps out;
  for (const auto& s : r.steps) out.emplace_back(to_string(s.slope), s.quotient_dims);
  return out;
}

StabilityCondition weights_from(const std::vector<std::string>& w, std::size_t vertex_count) {
  if (w.size() != vertex_count)
    throw InvalidArgument(std::to_string(w.size()) + " weights for " + std::to_string(vertex_count) + " vertices");
  StabilityCondition alpha;
  for (const auto& s : w) alpha.weights.push_back(parse_rational(s));
  return alpha;
}

py::tuple hn(const Instance& inst, const std::optional<std::vector<std::string>>& weights, bool oracle) {
  const Representation& v = inst.rep;
  const StabilityCondition alpha = weights ? weights_from(*weights, v.quiver.vertex_count()) : euler_stability(v.quiver);
  std::optional<HNReport> fast;
  if (inst.affine && !weights)
    fast = v.is_zero() ? HNReport{} : eta_from_lift(*inst.affine, v);
  else if (!inst.affine && is_equioriented_path(v.quiver) && is_antitone(alpha))
    fast = hn_from_barcode(barcode(v), v.quiver, alpha);

  if (!oracle) {
    if (!fast) throw InvalidArgument("no fast path for this instance; pass oracle=True");
    return py::make_tuple(steps(*fast), py::none());
  }
  HNReport brute = hn_bruteforce(v, alpha);
  if (!fast) return py::make_tuple(steps(brute), py::none());
  return py::make_tuple(steps(*fast), same_steps(*fast, brute));
}

py::dict lift(const Instance& inst, std::optional<std::size_t> window) {
  if (!inst.affine) throw InvalidArgument("lift needs an affine instance");
  const AffineQuiver& aq = *inst.affine;
  LiftWindow w = window ? LiftWindow{*window} : default_window(aq, inst.rep);
  LiftedMultiplicities m = lifted_multiplicities(aq, inst.rep, w);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> classes;
  for (const auto& [c, mult] : m.classes) classes[{c.u, c.len}] = mult;
  py::dict out;
  out["window"] = m.window.D;
  out["d_inf"] = m.d_inf;
  out["classes"] = classes;
  out["barcode"] = bars(m.barcode);
  return out;
}

py::dict summary(const VerifySummary& s) {
  py::dict out;
  out["cases"] = s.cases;
  out["passed"] = s.passed;
  out["first_failure"] = s.first_failure;
  out["reason"] = s.failure_reason;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact zigzag barcodes, Harder-Narasimhan filtrations and affine lifts";

  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  static py::exception<InvalidArgument> invalid_argument(m, "InvalidArgument", PyExc_ValueError);
  static py::exception<GuardExceeded> guard_exceeded(m, "GuardExceeded", PyExc_RuntimeError);
  static py::exception<InternalError> internal_error(m, "InternalError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const InvalidArgument& e) {
      py::set_error(invalid_argument, e.what());
    } catch (const GuardExceeded& e) {
      py::set_error(guard_exceeded, e.what());
    } catch (const InternalError& e) {
      py::set_error(internal_error, e.what());
    }
  });

  py::class_<Instance>(m, "Instance")
      .def_static("from_json", [](const std::string& text) { return parse_instance(text); })
      .def("to_json", &serialize_instance)
      .def_property_readonly("dims", [](const Instance& i) { return i.rep.dims; })
      .def_property_readonly("field", [](const Instance& i) { return field_name(i.rep.field); })
      .def_property_readonly("edges",
                             [](const Instance& i) {
                               std::vector<std::pair<std::size_t, std::size_t>> out;
                               for (const auto& e : i.rep.quiver.edges()) out.emplace_back(e.src, e.dst);
                               return out;
                             })
      .def_property_readonly("orientation",
                             [](const Instance& i) -> std::optional<std::vector<int>> {
                               if (!i.affine) return std::nullopt;
                               std::vector<int> out;
                               for (auto o : i.affine->orientation) out.push_back(o == Orientation::cw ? 0 : 1);
                               return out;
                             })
      .def("__eq__", [](const Instance& a, const Instance& b) { return a.rep == b.rep && a.affine == b.affine; })
      .def("__repr__", [](const Instance& i) {
        return "<Instance field=" + field_name(i.rep.field) + " vertices=" +
               std::to_string(i.rep.quiver.vertex_count()) + (i.affine ? " affine" : "") + ">";
      });

  m.def("barcode", [](const Instance& i) { return bars(barcode(i.rep)); }, py::arg("instance"));
  m.def("_hn", &hn, py::arg("instance"), py::arg("weights") = py::none(), py::arg("oracle") = false);
  m.def("lift", &lift, py::arg("instance"), py::arg("window") = py::none());

  m.def(
      "indec_N",
      [](const std::vector<int>& orientation, std::size_t u, std::size_t v, const std::string& field) {
        AffineQuiver aq = affine_from(orientation);
        return Instance{indec_N(aq, u, v, field_from(field)), aq};
      },
      py::arg("orientation"), py::arg("u"), py::arg("v"), py::arg("field") = "Q");
  m.def(
      "indec_T",
      [](const std::vector<int>& orientation, const std::string& lambda, std::size_t w, const std::string& field) {
        AffineQuiver aq = affine_from(orientation);
        Field f = field_from(field);
        return Instance{indec_T(aq, Scalar(f, parse_rational(lambda)), w), aq};
      },
      py::arg("orientation"), py::arg("lam"), py::arg("w"), py::arg("field") = "Q");

  m.def(
      "generate_persistence",
      [](std::size_t n, std::uint64_t seed, const std::string& field, std::size_t max_summands, bool zigzag) {
        PersistenceParams p;
        p.n = n;
        p.field = field_from(field);
        p.max_summands = max_summands;
        p.max_total_dim = 0;
        p.max_vertex_dim = 0;
        p.zigzag = zigzag;
        Rng rng(seed);
        GeneratedPersistence g = generate_persistence(p, rng);
        return py::make_tuple(Instance{g.rep, std::nullopt}, bars(g.truth));
      },
      py::arg("n"), py::arg("seed"), py::arg("field") = "2", py::arg("max_summands") = 3, py::arg("zigzag") = false);

  m.def(
      "verify",
      [](const std::string& theorem, std::size_t cases, std::uint64_t seed) {
        if (theorem == "a") return summary(verify_theorem_a(cases, seed));
        if (theorem == "b") return summary(verify_theorem_b(cases, seed));
        throw InvalidArgument("theorem must be \"a\" or \"b\"");
      },
      py::arg("theorem"), py::arg("cases") = 100, py::arg("seed") = 0);
}
