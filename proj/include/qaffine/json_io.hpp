#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qaffine/characters.hpp"
#include "qaffine/coloured.hpp"
#include "qaffine/coloured_series.hpp"
#include "qaffine/lattice_series.hpp"
#include "qaffine/qseries.hpp"

namespace qaffine::io {

enum class Format { kJson, kCsv, kText };

std::optional<Format> format_from_name(std::string_view name);

/* ---------------- JSON ----------------
 *
 * All JSON documents use a fixed key order and end with a newline, so the
 * byte stream is fully determined by the value.  Coefficients are rendered
 * as decimal strings (they outgrow any fixed-width integer).
 *
 * Series (one-variable or coloured):
 *   {"trunc_order": N, "q_min": m,
 *    "terms": [{"q": e, "colours": [..], "coeff": "<decimal>"}, ...]}
 * terms are sorted by q, then lexicographically by colour exponents; zero
 * coefficients are omitted.  One-variable series use "colours": [].
 *
 * Weight-lattice series over Q = e^{-delta/2}, X = e^{alpha_1}:
 *   {"trunc_order": N, "a_min": m,
 *    "terms": [{"a": .., "b": .., "coeff": "<decimal>"}, ...]}
 * sorted by (a, b).
 *
 * Partition: {"parts": [{"size": s, "colour": u}, ...], "weight": w}
 * with parts listed largest-first, the ground/tail included.
 *
 * Verification report:
 *   {"identity": "...", "order": N, "status": "PASS"|"FAIL",
 *    "first_mismatch": null | {"where": "...", "lhs": "...", "rhs": "..."},
 *    "floor_shift": s, "elapsed_ms": t}
 */
std::string to_json(const QSeries& s);
std::string to_json(const ColouredSeries& s);
std::string to_json(const LatticeSeries& s);
std::string to_json(const ColouredPartition& p);
std::string to_json(const VerifyReport& r);

/* Grid summary: {"cells": [<report>...], "total": n, "passed": k,
 * "status": "PASS"|"FAIL"}, cells in grid order.
 */
std::string grid_summary_json(const std::vector<VerifyReport>& cells);

/* JSON array of partition objects, in the given order. */
std::string partitions_json(const std::vector<ColouredPartition>& ps);

/* ---------------- CSV ----------------
 *
 * Rows only, no header, '\n' line ends; fields containing a comma, quote or
 * newline are quoted.  Row shapes:
 *   one-variable series : q,coeff            (dense: every 0 <= q <= order)
 *   coloured series     : q,c0,...,c{v-1},coeff   (sparse, sorted)
 *   lattice series      : a,b,coeff               (sparse, sorted)
 *   partition           : weight,size:colour;size:colour;...
 *   report              : identity,order,status,where,lhs,rhs,floor_shift,elapsed_ms
 */
std::string to_csv(const QSeries& s);
std::string to_csv(const ColouredSeries& s);
std::string to_csv(const LatticeSeries& s);
std::string to_csv(const ColouredPartition& p);
std::string to_csv(const VerifyReport& r);

/* ---------------- plain text ---------------- */
std::string to_text(const QSeries& s);
std::string to_text(const ColouredSeries& s);
std::string to_text(const LatticeSeries& s);
std::string to_text(const ColouredPartition& p);
std::string to_text(const VerifyReport& r);

/* Dispatch on format. */
template <typename T>
std::string render(const T& value, Format f) {
  switch (f) {
    case Format::kJson: return to_json(value);
    case Format::kCsv: return to_csv(value);
    default: return to_text(value);
  }
}

}  // namespace qaffine::io
