#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "altperm/cli.hpp"
#include "altperm/distributions.hpp"
#include "altperm/pop_count.hpp"
#include "altperm/springer.hpp"

namespace py = pybind11;
using namespace altperm;

namespace {

py::int_ to_py(const BigInt& x) { return py::int_(py::str(x.get_str())); }

py::object to_py(const BigRational& x) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(BigInt(x.get_num())), to_py(BigInt(x.get_den())));
}

// {(e_p, e_q): coefficient}
py::dict to_py(const DistributionPolynomial& d) {
  py::dict out;
  for (const auto& [m, c] : d.terms()) out[py::make_tuple(m.p, m.q)] = to_py(c);
  return out;
}

py::dict to_py(const LaurentPolynomial& x) {
  py::dict out;
  for (const auto& [m, c] : x.terms()) out[py::make_tuple(m.p, m.q)] = to_py(c);
  return out;
}

py::list to_py(const std::vector<BigInt>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

AltClass parse_class(const std::string& s) {
  if (s == "ud") return AltClass::UpDown;
  if (s == "du") return AltClass::DownUp;
  throw py::value_error("class must be 'ud' or 'du'");
}

StatKind parse_stat(const std::string& s) {
  if (s == "lrmax") return StatKind::LrMax;
  if (s == "rlmax") return StatKind::RlMax;
  if (s == "lrmin") return StatKind::LrMin;
  if (s == "rlmin") return StatKind::RlMin;
  throw py::value_error("unknown statistic '" + s + "'");
}

StatPair parse_pair(const std::string& s) {
  if (s == "max") return StatPair::Maxima;
  if (s == "min") return StatPair::Minima;
  throw py::value_error("pair must be 'max' or 'min'");
}

MmpVariant parse_mmp(const std::string& s) {
  if (s == "A") return MmpVariant::A;
  if (s == "B") return MmpVariant::B;
  if (s == "C") return MmpVariant::C;
  if (s == "D") return MmpVariant::D;
  throw py::value_error("variant must be one of A, B, C, D");
}

FlatPopVariant parse_variant(const std::string& s) {
  if (s == "lambda") return FlatPopVariant::Lambda;
  if (s == "top_first") return FlatPopVariant::TopFirst;
  if (s == "bottom_first") return FlatPopVariant::BottomFirst;
  if (s == "vee") return FlatPopVariant::Vee;
  throw py::value_error("unknown flat pattern '" + s + "'");
}

int series_order(int n) { return std::max(n, 1); }

}  // namespace

PYBIND11_MODULE(altperm, m) {
  m.doc() = "Statistics and pattern avoidance on alternating permutations";

  py::register_exception<VerificationError>(m, "VerificationError");

  m.def("enumerate_alternating", [](int n, const std::string& cls) {
    std::vector<std::vector<int>> out;
    for_each_alternating(n, parse_class(cls), [&](std::span<const int> pi) { out.emplace_back(pi.begin(), pi.end()); });
    return out;
  }, py::arg("n"), py::arg("cls") = "ud");
  m.def("is_alternating", [](const std::vector<int>& p, const std::string& cls) {
    return is_alternating(Permutation(p), parse_class(cls));
  }, py::arg("perm"), py::arg("cls") = "ud");
  m.def("stat", [](const std::vector<int>& p, const std::string& kind) { return stat(Permutation(p), parse_stat(kind)); });
  m.def("mmp_count", [](const std::vector<int>& p, int a, int b, int c, int d) {
    return mmp_count(Permutation(p), MmpSpec{a, b, c, d});
  });
  m.def("is_rc_fixed", [](const std::vector<int>& p) { return is_rc_fixed(Permutation(p)); });
  m.def("extreme_stats", [](const std::vector<int>& p) {
    const auto s = extreme_stats(Permutation(p));
    return py::make_tuple(s.lle, s.be);
  });
  m.def("pop_occurrences", [](const std::vector<int>& p, int k, const std::vector<std::pair<int, int>>& less_than) {
    return pop_occurrences(Permutation(p), Pop(k, less_than));
  }, py::arg("perm"), py::arg("k"), py::arg("less_than"));

  m.def("euler_numbers", [](int n) { return to_py(euler_numbers(n)); });
  m.def("springer_numbers", [](int n) { return to_py(springer_numbers(n)); });
  m.def("rc_count_recurrence", [](int n) { return to_py(rc_count_recurrence(n)); });
  m.def("brute_rc_count", [](int half_n) { return to_py(brute_rc_count(half_n)); });
  m.def("brute_lle_be", [](int length) { return to_py(brute_lle_be(length)); });
  m.def("q_springer_coefficient", [](const std::string& which, int n) {
    const int order = series_order(n);
    LaurentSeries f = which == "lle"   ? gf_Q(order)
                      : which == "be"  ? gf_U(order)
                      : which == "joint" ? gf_W(order)
                                         : throw py::value_error("which must be 'lle', 'be' or 'joint'");
    return to_py(egf_coefficient(f, n));
  }, "n! [t^n] of the lle, be or joint q-analogue of the Springer series");
  m.def("section7_coefficient", [](int which, int n) { return to_py(egf_coefficient(q_springer_series(which, series_order(n)), n)); });

  m.def("brute_single", [](int n, const std::string& cls, const std::string& kind) {
    return to_py(brute_single(n, parse_class(cls), parse_stat(kind)));
  });
  m.def("gf_single", [](int n, const std::string& cls, const std::string& kind) {
    const int v = single_variant_for(parse_class(cls), n, parse_stat(kind));
    return to_py(extract_distribution(gf_single(v, series_order(n)), n, "F"));
  }, "Distribution of one statistic read off the closed-form generating function");
  m.def("brute_joint_mmp", [](int n, const std::string& cls, const std::string& pair) {
    return to_py(brute_joint_mmp(n, parse_class(cls), parse_pair(pair)));
  }, py::arg("n"), py::arg("cls"), py::arg("pair") = "max");
  m.def("gf_joint_mmp", [](const std::string& variant, int n) {
    return to_py(extract_distribution(gf_joint_mmp(parse_mmp(variant), series_order(n)), n, variant));
  });
  m.def("rec_joint_mmp", [](const std::string& variant, int n) { return to_py(rec_joint_mmp(parse_mmp(variant), n)); });
  m.def("brute_joint_maxmin", [](int n, const std::string& cls, const std::string& pair) {
    return to_py(brute_joint_maxmin(n, parse_class(cls), parse_pair(pair)));
  }, py::arg("n"), py::arg("cls"), py::arg("pair") = "max");
  m.def("gf_joint_maxmin", [](int variant, int n) {
    return to_py(extract_distribution(gf_joint_maxmin(variant, series_order(n)), n, "G"));
  });
  m.def("check_equidistribution", [](int n) {
    py::list out;
    for (const auto& r : check_equidistribution(n)) out.append(py::make_tuple(r.name, r.passed));
    return out;
  });

  m.def("flat_pop_count", [](int k, int n, const std::string& shape) {
    if (shape != "a" && shape != "b") throw py::value_error("shape must be 'a' or 'b'");
    return to_py(flat_pop_count_rec(k, n, shape == "a" ? AvoidanceShape::A : AvoidanceShape::B));
  });
  m.def("pop_table_lookup", [](const std::string& variant, int k, const std::string& cls, int n) {
    return to_py(pop_table_lookup(parse_variant(variant), k, parse_class(cls), n));
  });
  m.def("brute_flat_pop_avoiding", [](int n, const std::string& cls, const std::string& variant, int k) {
    return to_py(brute_flat_pop_avoiding(n, parse_class(cls), parse_variant(variant), k));
  });
  m.def("flat_pop_distribution", [](int n, int k) { return to_py(flat_pop_distribution(n, k).counts); });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "Runs the command line; returns (exit code, stdout, stderr).");
}
