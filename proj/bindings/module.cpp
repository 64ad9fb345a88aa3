/* Python bindings for the exact q-series verification core.
 *
 * Counts and coefficients are returned as decimal strings (they exceed any
 * machine integer); the Python package converts them with int().
 */

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "qaffine/characters.hpp"
#include "qaffine/classical.hpp"
#include "qaffine/coloured.hpp"
#include "qaffine/crystal.hpp"
#include "qaffine/json_io.hpp"

namespace py = pybind11;
using namespace qaffine;

namespace {

using PartPairs = std::vector<std::pair<int, int>>;  // (size, colour)

PartPairs to_pairs(const ColouredPartition& p) {
  PartPairs out;
  out.reserve(p.size());
  for (const auto& part : p) out.emplace_back(part.size, part.colour);
  return out;
}

ColouredPartition from_pairs(const PartPairs& pairs) {
  ColouredPartition p;
  p.reserve(pairs.size());
  for (const auto& [size, colour] : pairs) p.push_back(ColouredPart{size, colour});
  return p;
}

std::vector<std::string> coeff_strings(const QSeries& s) {
  std::vector<std::string> out;
  out.reserve(static_cast<size_t>(s.order()) + 1);
  for (int e = 0; e <= s.order(); ++e) out.push_back(to_decimal(s.at(e)));
  return out;
}

ProductFamily family_from(const std::string& name) {
  if (name == "ag") return ProductFamily::kAndrewsGordon;
  if (name == "bressoud") return ProductFamily::kBressoud;
  if (name == "main-exact") return ProductFamily::kMainExact;
  if (name == "main-atleast") return ProductFamily::kMainAtLeast;
  throw std::invalid_argument("unknown product family: " + name);
}

Level2Module module_from(const std::string& name) {
  auto m = module_from_name(name);
  if (!m) throw std::invalid_argument("unknown module: " + name);
  return *m;
}

py::dict report_dict(const VerifyReport& r) {
  py::dict d;
  d["identity"] = r.identity;
  d["order"] = r.order;
  d["status"] = r.pass ? "PASS" : "FAIL";
  if (r.mismatch) {
    py::dict m;
    m["where"] = r.mismatch->where;
    m["lhs"] = r.mismatch->lhs;
    m["rhs"] = r.mismatch->rhs;
    d["first_mismatch"] = m;
  } else {
    d["first_mismatch"] = py::none();
  }
  d["floor_shift"] = r.floor_shift;
  d["elapsed_ms"] = r.elapsed_ms;
  return d;
}

std::vector<PartPairs> flatten_buckets(const std::vector<std::vector<ColouredPartition>>& buckets) {
  std::vector<PartPairs> out;
  for (const auto& bucket : buckets)
    for (const auto& p : bucket) out.push_back(to_pairs(p));
  return out;
}

}  // namespace

PYBIND11_MODULE(qaffine_core, m) {
  m.doc() = "Exact q-series verification of coloured partition and affine character identities";

  // ---- counts (decimal strings) ----
  m.def("count_partitions", [](int w) { return to_decimal(count_partitions(w)); },
        py::arg("m"), "Number of unrestricted partitions of m");
  m.def("count_exact", [](int i, int n, int w) { return to_decimal(count_exact(i, n, w)); },
        py::arg("i"), py::arg("n"), py::arg("m"),
        "Partitions of m in the exact-difference coloured family");
  m.def("count_atleast", [](int i, int n, int w) { return to_decimal(count_atleast(i, n, w)); },
        py::arg("i"), py::arg("n"), py::arg("m"),
        "Partitions of m in the at-least-difference coloured family");
  m.def("meurman_primc_count",
        [](int i, int n, int w) { return to_decimal(meurman_primc_count(i, n, w)); },
        py::arg("i"), py::arg("n"), py::arg("m"));
  m.def("andrews_gordon_count",
        [](int i, int r, int w) { return to_decimal(andrews_gordon_count(i, r, w)); },
        py::arg("i"), py::arg("r"), py::arg("m"));
  m.def("bressoud_count",
        [](int i, int r, int w) { return to_decimal(bressoud_count(i, r, w)); },
        py::arg("i"), py::arg("r"), py::arg("m"));

  // ---- series coefficients (decimal strings, q^0..q^order) ----
  m.def("product_coeffs",
        [](const std::string& family, int i, int rn, int order) {
          return coeff_strings(product_side(family_from(family), ProductParams{i, rn}, order));
        },
        py::arg("family"), py::arg("i"), py::arg("rn"), py::arg("order"),
        "Coefficients of the product side: family in {ag, bressoud, main-exact, main-atleast}");
  m.def("weyl_kac_coeffs",
        [](int i, int n, int order) { return coeff_strings(weyl_kac_principal(i, n, order)); },
        py::arg("i"), py::arg("n"), py::arg("order"),
        "Principally specialised character coefficients");

  // ---- enumerations ----
  m.def("enum_exact",
        [](int i, int n, int max_weight) { return flatten_buckets(exact_partitions(i, n, max_weight)); },
        py::arg("i"), py::arg("n"), py::arg("max_weight"),
        "Exact-family partitions up to max_weight as lists of (size, colour) pairs");
  m.def("enum_atleast",
        [](int i, int n, int max_weight) { return flatten_buckets(atleast_partitions(i, n, max_weight)); },
        py::arg("i"), py::arg("n"), py::arg("max_weight"));

  // ---- bijections ----
  m.def("path_to_partition",
        [](int i, int n, const std::vector<int>& prefix) {
          return to_pairs(path_to_partition(CrystalPath{i, n, prefix}));
        },
        py::arg("i"), py::arg("n"), py::arg("prefix"),
        "Partition attached to the path deviating in the given prefix");
  m.def("partition_to_path",
        [](const PartPairs& parts, int i, int n) {
          return partition_to_path(from_pairs(parts), i, n).prefix;
        },
        py::arg("parts"), py::arg("i"), py::arg("n"));
  m.def("psi_split",
        [](const PartPairs& parts, int i, int n) {
          const SplitResult s = psi_split(from_pairs(parts), i, n);
          return py::make_tuple(to_pairs(s.mu), s.nu);
        },
        py::arg("parts"), py::arg("i"), py::arg("n"),
        "Split an at-least partition into (exact partition, plain partition)");
  m.def("psi_merge",
        [](const PartPairs& mu, const std::vector<int>& nu, int i, int n) {
          return to_pairs(psi_merge(SplitResult{from_pairs(mu), nu}, i, n));
        },
        py::arg("mu"), py::arg("nu"), py::arg("i"), py::arg("n"));

  // ---- verification reports (dicts mirroring the JSON schema) ----
  m.def("verify_main",
        [](int i, int n, bool at_least, int order) {
          return report_dict(verify_main(i, n, at_least, order));
        },
        py::arg("i"), py::arg("n"), py::arg("at_least"), py::arg("order"));
  m.def("verify_meurman_primc",
        [](int i, int n, int order) { return report_dict(verify_meurman_primc(i, n, order)); },
        py::arg("i"), py::arg("n"), py::arg("order"));
  m.def("verify_andrews_gordon",
        [](int i, int r, int order) { return report_dict(verify_andrews_gordon(i, r, order)); },
        py::arg("i"), py::arg("r"), py::arg("order"));
  m.def("verify_bressoud",
        [](int i, int r, int order) { return report_dict(verify_bressoud(i, r, order)); },
        py::arg("i"), py::arg("r"), py::arg("order"));
  m.def("verify_weyl_kac",
        [](int i, int n, int order) { return report_dict(verify_weyl_kac(i, n, order)); },
        py::arg("i"), py::arg("n"), py::arg("order"));
  m.def("verify_character",
        [](const std::string& module, int order) {
          return report_dict(verify_character(module_from(module), order));
        },
        py::arg("module"), py::arg("order"));

  // ---- JSON renderings ----
  m.def("gf_closed_json",
        [](const std::string& module, int order) {
          return io::to_json(level2_gf_closed(module_from(module), order));
        },
        py::arg("module"), py::arg("order"),
        "Closed coloured generating function, JSON series document");
  m.def("gf_enum_json",
        [](const std::string& module, int order) {
          return io::to_json(gf_from_enumeration(module_from(module), order));
        },
        py::arg("module"), py::arg("order"));
  m.def("char_closed_json",
        [](const std::string& module, int order) {
          return io::to_json(level2_char_closed(module_from(module), order));
        },
        py::arg("module"), py::arg("order"),
        "Closed lattice character, JSON series document");
}
