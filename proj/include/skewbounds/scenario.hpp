/**
 * This code is part of skewbounds.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "skewbounds/bounds.hpp"
#include "skewbounds/quantum.hpp"

namespace skewbounds {

//=========================================================================
// Scenario description, loaded from JSON
//=========================================================================

// Bloch entries are either literals or c*cos(theta) / c*sin(theta); that
// covers every swept state this tool deals in, anything fancier is a file
// error.
struct BlochEntry {
  enum class Kind { constant, cos_theta, sin_theta };
  Kind kind = Kind::constant;
  double coeff = 0.0;

  bool uses_theta() const { return kind != Kind::constant; }
  double eval(double theta) const {
    switch (kind) {
    case Kind::cos_theta:
      return coeff * std::cos(theta);
    case Kind::sin_theta:
      return coeff * std::sin(theta);
    default:
      return coeff;
    }
  }
};

struct StateSpec {
  std::optional<std::array<BlochEntry, 3>> bloch;
  std::optional<ComplexMatrix> matrix;

  bool uses_theta() const {
    if (!bloch)
      return false;
    for (const auto &e : *bloch)
      if (e.uses_theta())
        return true;
    return false;
  }
  std::size_t dim() const { return bloch ? 2 : matrix->rows(); }
};

struct PresetSpec {
  std::string name; // phase_damping | amplitude_damping | bit_flip
  double q = 0.0;
};

struct PauliRotationSpec {
  PauliAxis axis = PauliAxis::z;
  double angle = 0.0;
};

struct ChannelSpec {
  // exactly one of these is set
  std::optional<PresetSpec> preset;
  std::optional<std::vector<ComplexMatrix>> kraus;
  std::optional<ComplexMatrix> unitary_matrix;
  std::optional<PauliRotationSpec> pauli_rotation;

  bool is_unitary() const {
    return unitary_matrix.has_value() || pauli_rotation.has_value();
  }
};

struct SweepSpec {
  enum class Param { theta, q };
  Param param = Param::theta;
  double from = 0.0;
  double to = 0.0;
  std::size_t steps = 2;
};

struct Scenario {
  std::string id;
  StateSpec state;
  std::vector<ChannelSpec> channels;
  std::optional<SweepSpec> sweep;
};

//=========================================================================
// JSON parsing. Shape problems are ParseError, semantic problems (bad
// norms, non-CPTP operator lists, mismatched dimensions) ValidationError.
//=========================================================================

namespace detail {

using nlohmann::json;

inline void require_keys(const json &obj, std::initializer_list<const char *> allowed,
                         const std::string &where) {
  for (const auto &item : obj.items()) {
    bool ok = false;
    for (const char *k : allowed)
      if (item.key() == k)
        ok = true;
    if (!ok)
      throw ParseError("unknown key '" + item.key() + "' in " + where);
  }
}

inline double number_at(const json &obj, const char *key,
                        const std::string &where) {
  if (!obj.contains(key) || !obj[key].is_number())
    throw ParseError("expected numeric '" + std::string(key) + "' in " + where);
  return obj[key].get<double>();
}

inline BlochEntry parse_bloch_entry(const json &v) {
  if (v.is_number())
    return {BlochEntry::Kind::constant, v.get<double>()};
  if (!v.is_string())
    throw ParseError("bloch entries must be numbers or expression strings");
  static const std::regex re(
      R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*(?:\*\s*(cos|sin)\(\s*theta\s*\)\s*)?$)");
  std::smatch m;
  const std::string s = v.get<std::string>();
  if (!std::regex_match(s, m, re))
    throw ParseError("unsupported bloch expression '" + s +
                     "' (allowed: c, c*cos(theta), c*sin(theta))");
  BlochEntry e;
  e.coeff = std::stod(m[1].str());
  if (m[2].matched)
    e.kind = (m[2].str() == "cos") ? BlochEntry::Kind::cos_theta
                                   : BlochEntry::Kind::sin_theta;
  return e;
}

inline ComplexMatrix parse_matrix(const json &v, const std::string &where) {
  if (!v.is_array() || v.empty())
    throw ParseError("matrix in " + where + " must be a non-empty array of rows");
  const std::size_t nr = v.size();
  std::size_t nc = 0;
  ComplexMatrix m;
  for (std::size_t i = 0; i < nr; ++i) {
    const json &row = v[i];
    if (!row.is_array())
      throw ParseError("matrix row in " + where + " is not an array");
    if (i == 0) {
      nc = row.size();
      m = ComplexMatrix(nr, nc);
    } else if (row.size() != nc) {
      throw ParseError("ragged matrix in " + where);
    }
    for (std::size_t j = 0; j < nc; ++j) {
      const json &cell = row[j];
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
          !cell[1].is_number())
        throw ParseError("matrix entries in " + where +
                         " must be [re, im] number pairs");
      m(i, j) = cplx(cell[0].get<double>(), cell[1].get<double>());
    }
  }
  if (!all_finite(m))
    throw ValidationError("non-finite matrix entry in " + where);
  return m;
}

inline ChannelSpec parse_channel(const json &v, std::size_t index) {
  const std::string where = "channels[" + std::to_string(index) + "]";
  if (!v.is_object() || v.size() != 1)
    throw ParseError(where + " must hold exactly one of preset/kraus/unitary");
  ChannelSpec spec;
  if (v.contains("preset")) {
    const json &p = v["preset"];
    require_keys(p, {"name", "q"}, where + ".preset");
    if (!p.contains("name") || !p["name"].is_string())
      throw ParseError("preset in " + where + " needs a string 'name'");
    PresetSpec preset;
    preset.name = p["name"].get<std::string>();
    preset.q = number_at(p, "q", where + ".preset");
    if (preset.name != "phase_damping" && preset.name != "amplitude_damping" &&
        preset.name != "bit_flip")
      throw ValidationError("unknown preset '" + preset.name + "' in " + where);
    if (!(preset.q >= 0.0 && preset.q < 1.0))
      throw ValidationError("preset q outside [0, 1) in " + where);
    spec.preset = preset;
  } else if (v.contains("kraus")) {
    const json &ops = v["kraus"];
    if (!ops.is_array() || ops.empty())
      throw ParseError(where + ".kraus must be a non-empty array of matrices");
    std::vector<ComplexMatrix> mats;
    for (std::size_t k = 0; k < ops.size(); ++k)
      mats.push_back(parse_matrix(ops[k], where + ".kraus[" + std::to_string(k) + "]"));
    spec.kraus = std::move(mats);
  } else if (v.contains("unitary")) {
    const json &u = v["unitary"];
    if (!u.is_object() || u.size() != 1)
      throw ParseError(where + ".unitary must hold exactly one of "
                               "matrix/pauli_rotation");
    if (u.contains("matrix")) {
      spec.unitary_matrix = parse_matrix(u["matrix"], where + ".unitary");
    } else if (u.contains("pauli_rotation")) {
      const json &r = u["pauli_rotation"];
      require_keys(r, {"axis", "angle"}, where + ".pauli_rotation");
      if (!r.contains("axis") || !r["axis"].is_string())
        throw ParseError("pauli_rotation in " + where + " needs a string 'axis'");
      const std::string axis = r["axis"].get<std::string>();
      PauliRotationSpec rot;
      if (axis == "x")
        rot.axis = PauliAxis::x;
      else if (axis == "y")
        rot.axis = PauliAxis::y;
      else if (axis == "z")
        rot.axis = PauliAxis::z;
      else
        throw ValidationError("pauli_rotation axis must be x, y or z in " + where);
      rot.angle = number_at(r, "angle", where + ".pauli_rotation");
      spec.pauli_rotation = rot;
    } else {
      throw ParseError(where + ".unitary must hold matrix or pauli_rotation");
    }
  } else {
    throw ParseError(where + " must hold one of preset/kraus/unitary");
  }
  return spec;
}

} // namespace detail

inline Scenario parse_scenario(const nlohmann::json &js) {
  if (!js.is_object())
    throw ParseError("scenario root must be a JSON object");
  detail::require_keys(js, {"id", "state", "channels", "sweep"}, "scenario");
  if (!js.contains("id") || !js["id"].is_string())
    throw ParseError("scenario needs a string 'id'");
  if (!js.contains("state") || !js["state"].is_object())
    throw ParseError("scenario needs a 'state' object");
  if (!js.contains("channels") || !js["channels"].is_array() ||
      js["channels"].empty())
    throw ParseError("scenario needs a non-empty 'channels' array");

  Scenario sc;
  sc.id = js["id"].get<std::string>();

  const nlohmann::json &st = js["state"];
  if (st.size() != 1 || (!st.contains("bloch") && !st.contains("matrix")))
    throw ParseError("state must hold exactly one of bloch/matrix");
  if (st.contains("bloch")) {
    const nlohmann::json &b = st["bloch"];
    if (!b.is_array() || b.size() != 3)
      throw ParseError("state.bloch must be a 3-entry array");
    std::array<BlochEntry, 3> entries;
    for (std::size_t k = 0; k < 3; ++k)
      entries[k] = detail::parse_bloch_entry(b[k]);
    sc.state.bloch = entries;
  } else {
    sc.state.matrix = detail::parse_matrix(st["matrix"], "state.matrix");
    try {
      DensityMatrix probe(*sc.state.matrix); // validates Hermitian/PSD/trace
    } catch (const Error &e) {
      throw ValidationError(std::string("state.matrix: ") + e.what());
    }
  }

  for (std::size_t k = 0; k < js["channels"].size(); ++k)
    sc.channels.push_back(detail::parse_channel(js["channels"][k], k));

  if (js.contains("sweep")) {
    const nlohmann::json &sw = js["sweep"];
    detail::require_keys(sw, {"param", "from", "to", "steps"}, "sweep");
    if (!sw.contains("param") || !sw["param"].is_string())
      throw ParseError("sweep needs a string 'param'");
    SweepSpec spec;
    const std::string param = sw["param"].get<std::string>();
    if (param == "theta")
      spec.param = SweepSpec::Param::theta;
    else if (param == "q")
      spec.param = SweepSpec::Param::q;
    else
      throw ParseError("sweep param must be theta or q");
    spec.from = detail::number_at(sw, "from", "sweep");
    spec.to = detail::number_at(sw, "to", "sweep");
    if (!sw.contains("steps") || !sw["steps"].is_number_integer())
      throw ParseError("sweep needs an integer 'steps'");
    const auto steps = sw["steps"].get<long long>();
    if (steps < 2)
      throw ValidationError("sweep.steps must be at least 2");
    spec.steps = static_cast<std::size_t>(steps);
    sc.sweep = spec;
  }

  // early semantic checks that do not depend on theta
  if (sc.state.bloch && !sc.state.uses_theta()) {
    const auto &b = *sc.state.bloch;
    const double len = std::sqrt(b[0].coeff * b[0].coeff +
                                 b[1].coeff * b[1].coeff +
                                 b[2].coeff * b[2].coeff);
    if (len > 1.0 + 1e-12)
      throw ValidationError("bloch vector longer than 1");
  }
  const std::size_t d = sc.state.dim();
  for (std::size_t k = 0; k < sc.channels.size(); ++k) {
    const auto &ch = sc.channels[k];
    const std::string where = "channels[" + std::to_string(k) + "]";
    if (ch.preset || ch.pauli_rotation) {
      if (d != 2)
        throw ValidationError(where + " is qubit-only but the state has "
                                      "dimension " + std::to_string(d));
    } else if (ch.kraus) {
      try {
        KrausChannel probe("kraus", *ch.kraus); // validates CPTP + shapes
        if (probe.dim() != d)
          throw ShapeMismatch("dimension mismatch with the state");
      } catch (const Error &e) {
        throw ValidationError(where + ": " + e.what());
      }
    } else if (ch.unitary_matrix) {
      try {
        UnitaryChannel probe("unitary", *ch.unitary_matrix);
        if (probe.dim() != d)
          throw ShapeMismatch("dimension mismatch with the state");
      } catch (const Error &e) {
        throw ValidationError(where + ": " + e.what());
      }
    }
  }
  return sc;
}

inline Scenario parse_scenario_string(const std::string &text) {
  nlohmann::json js;
  try {
    js = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_scenario(js);
}

inline Scenario load_scenario(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot open scenario file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad())
    throw IoError("cannot read scenario file " + path.string());
  return parse_scenario_string(buf.str());
}

//=========================================================================
// Instantiation at a parameter point
//=========================================================================

struct EvalPoint {
  std::optional<double> theta;
  std::optional<double> q; // overrides every preset q
};

struct Instance {
  DensityMatrix state;
  std::vector<KrausChannel> channels;
  std::vector<UnitaryChannel> unitaries; // filled when every channel is unitary
  bool all_unitary = false;
};

inline Instance instantiate(const Scenario &sc, const EvalPoint &point) {
  if (sc.state.uses_theta() && !point.theta)
    throw ValidationError("scenario '" + sc.id +
                          "' needs a theta value (state depends on theta)");

  std::optional<DensityMatrix> state;
  if (sc.state.bloch) {
    const double theta = point.theta.value_or(0.0);
    std::array<double, 3> r{};
    for (std::size_t k = 0; k < 3; ++k)
      r[k] = (*sc.state.bloch)[k].eval(theta);
    try {
      state = bloch_state(r);
    } catch (const BlochVectorTooLong &e) {
      throw ValidationError(e.what());
    }
  } else {
    state = DensityMatrix(*sc.state.matrix);
  }

  Instance inst{std::move(*state), {}, {}, true};
  for (const auto &spec : sc.channels) {
    if (spec.preset) {
      const double q = point.q.value_or(spec.preset->q);
      if (spec.preset->name == "phase_damping")
        inst.channels.push_back(phase_damping(q));
      else if (spec.preset->name == "amplitude_damping")
        inst.channels.push_back(amplitude_damping(q));
      else
        inst.channels.push_back(bit_flip(q));
      inst.all_unitary = false;
    } else if (spec.kraus) {
      inst.channels.emplace_back("kraus", *spec.kraus);
      inst.all_unitary = false;
    } else if (spec.unitary_matrix) {
      UnitaryChannel u("unitary", *spec.unitary_matrix);
      inst.channels.push_back(as_kraus(u));
      inst.unitaries.push_back(std::move(u));
    } else {
      UnitaryChannel u =
          pauli_rotation_unitary(spec.pauli_rotation->axis, spec.pauli_rotation->angle);
      inst.channels.push_back(as_kraus(u));
      inst.unitaries.push_back(std::move(u));
    }
    if (inst.channels.back().dim() != inst.state.dim())
      throw ValidationError("channel dimension mismatch with the state");
  }
  if (!inst.all_unitary)
    inst.unitaries.clear();
  return inst;
}

// common preset q for reporting: the override if given, else the shared
// preset value when one exists
inline std::optional<double> effective_q(const Scenario &sc,
                                         const EvalPoint &point) {
  if (point.q)
    return point.q;
  std::optional<double> q;
  for (const auto &ch : sc.channels)
    if (ch.preset) {
      if (!q)
        q = ch.preset->q;
      else if (*q != ch.preset->q)
        return std::nullopt;
    }
  return q;
}

inline BoundReport report_at(const Scenario &sc, const EvalPoint &point,
                             const PermSearchPolicy &policy = {}) {
  const Instance inst = instantiate(sc, point);
  if (inst.all_unitary)
    return unitary_bounds(inst.state, inst.unitaries);
  return full_report(inst.state, inst.channels, policy);
}

//=========================================================================
// Sweep rows and CSV
//=========================================================================

struct SweepRow {
  std::string scenario_id;
  std::optional<double> theta, q;
  std::optional<double> sum, lbbar1, lbbar2, lb1, lb2, lb3, thm2_lhs, thm2_rhs;
};

inline constexpr const char *csv_header =
    "scenario_id,theta,q,sum,lbbar1,lbbar2,lb1,lb2,lb3,thm2_lhs,thm2_rhs";

inline SweepRow make_row(const Scenario &sc, const EvalPoint &point,
                         const BoundReport &report) {
  SweepRow row;
  row.scenario_id = sc.id;
  row.theta = point.theta;
  row.q = effective_q(sc, point);
  row.sum = report.sum;
  row.lbbar1 = report.lbbar1;
  row.lbbar2 = report.lbbar2;
  row.lb1 = report.lb1;
  row.lb2 = report.lb2;
  row.lb3 = report.lb3;
  row.thm2_lhs = report.thm2_lhs;
  row.thm2_rhs = report.thm2_rhs;
  return row;
}

inline std::vector<SweepRow> run_sweep(const Scenario &sc,
                                       const PermSearchPolicy &policy = {}) {
  if (!sc.sweep)
    throw ValidationError("scenario '" + sc.id + "' has no sweep block");
  const SweepSpec &sw = *sc.sweep;
  std::vector<SweepRow> rows;
  rows.reserve(sw.steps);
  for (std::size_t k = 0; k < sw.steps; ++k) {
    const double x = sw.from + (sw.to - sw.from) * static_cast<double>(k) /
                                   static_cast<double>(sw.steps - 1);
    EvalPoint point;
    if (sw.param == SweepSpec::Param::theta)
      point.theta = x;
    else
      point.q = x;
    try {
      rows.push_back(make_row(sc, point, report_at(sc, point, policy)));
    } catch (const Error &e) {
      throw ValidationError("sweep row " + std::to_string(k) + " (" +
                            (sw.param == SweepSpec::Param::theta ? "theta" : "q") +
                            "=" + std::to_string(x) + ") failed: " + e.what());
    }
  }
  return rows;
}

// 12 significant digits, shortest decimal form
inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

inline std::string csv_to_string(const std::vector<SweepRow> &rows) {
  std::string out = csv_header;
  out += '\n';
  const auto cell = [](const std::optional<double> &v) {
    return v ? format_number(*v) : std::string();
  };
  for (const auto &r : rows) {
    out += r.scenario_id;
    for (const auto &v : {r.theta, r.q, r.sum, r.lbbar1, r.lbbar2, r.lb1, r.lb2,
                          r.lb3, r.thm2_lhs, r.thm2_rhs}) {
      out += ',';
      out += cell(v);
    }
    out += '\n';
  }
  return out;
}

inline void emit_csv(const std::vector<SweepRow> &rows,
                     const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw IoError("cannot open " + path.string() + " for writing");
  out << csv_to_string(rows);
  out.flush();
  if (!out)
    throw IoError("failed writing " + path.string());
}

inline std::vector<SweepRow> parse_csv_string(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != csv_header)
    throw ParseError("unexpected CSV header");
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty())
      continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ','))
      cells.push_back(cell);
    if (cells.size() > 11)
      throw ParseError("CSV row with more than 11 fields");
    cells.resize(11); // trailing empty fields drop out of getline
    SweepRow row;
    row.scenario_id = cells[0];
    const auto num = [&](std::size_t idx) -> std::optional<double> {
      if (cells[idx].empty())
        return std::nullopt;
      try {
        return std::stod(cells[idx]);
      } catch (const std::exception &) {
        throw ParseError("non-numeric CSV field '" + cells[idx] + "'");
      }
    };
    row.theta = num(1);
    row.q = num(2);
    row.sum = num(3);
    row.lbbar1 = num(4);
    row.lbbar2 = num(5);
    row.lb1 = num(6);
    row.lb2 = num(7);
    row.lb3 = num(8);
    row.thm2_lhs = num(9);
    row.thm2_rhs = num(10);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<SweepRow> read_csv(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv_string(buf.str());
}

} // namespace skewbounds
