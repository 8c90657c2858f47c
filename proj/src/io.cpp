#include "hnzz/io.hpp"

#include <json.hpp>

#include "hnzz/error.hpp"

namespace hnzz {

namespace {

using json = nlohmann::ordered_json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

const json& member(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  return obj.at(key);
}

template <class T>
T get_as(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("\"") + what + "\" has the wrong type");
  }
}

std::size_t get_nat(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw ParseError(std::string("\"") + what + "\" must be a nonnegative integer");
  return j.get<std::size_t>();
}

const json& get_array(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string("\"") + what + "\" must be an array");
  return j;
}

Field parse_field(const json& j) {
  auto kind = get_as<std::string>(member(j, "kind"), "field.kind");
  if (kind == "rational") return Field::rational();
  if (kind == "prime") {
    std::size_t p = get_nat(member(j, "p"), "field.p");
    if (p > 0x7fffffffu || !is_prime_number(p)) throw InvalidArgument("field modulus " + std::to_string(p) + " is not a prime below 2^31");
    return Field::prime(static_cast<std::uint32_t>(p));
  }
  throw ParseError("unknown field kind \"" + kind + "\"");
}

json field_json(const Field& f) {
  json j;
  if (f.is_rational()) {
    j["kind"] = "rational";
  } else {
    j["kind"] = "prime";
    j["p"] = f.modulus();
  }
  return j;
}

Scalar parse_entry(const json& j, const Field& field) {
  if (field.is_rational()) {
    if (j.is_string()) {
      try {
        return Scalar(field, parse_rational(j.get<std::string>()));
      } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
      }
    }
    if (j.is_number_integer()) return Scalar(field, j.get<long>());
    throw ParseError("rational matrix entries must be strings \"a/b\"");
  }
  if (!j.is_number_integer()) throw ParseError("prime-field matrix entries must be integers");
  long long r = j.get<long long>();
  if (r < 0 || r >= static_cast<long long>(field.modulus()))
    throw InvalidArgument("matrix entry " + std::to_string(r) + " is not a residue in [0," +
                          std::to_string(field.modulus()) + ")");
  return Scalar::from_residue(field, static_cast<std::uint32_t>(r));
}

json entry_json(const Scalar& s) {
  if (s.field().is_rational()) return s.to_string();
  return s.residue();
}

json matrix_rows(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(entry_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json barcode_json(const Barcode& bar) {
  json out = json::array();
  for (const auto& [i, mult] : bar) out.push_back({{"lo", i.lo}, {"hi", i.hi}, {"mult", mult}});
  return out;
}

Barcode parse_barcode(const json& j) {
  Barcode bar;
  for (const auto& e : get_array(j, "barcode")) {
    Interval i{get_nat(member(e, "lo"), "lo"), get_nat(member(e, "hi"), "hi")};
    std::size_t mult = get_nat(member(e, "mult"), "mult");
    if (i.lo > i.hi) throw InvalidArgument("interval with lo > hi");
    if (mult == 0) throw InvalidArgument("interval multiplicity must be positive");
    bar[i] += mult;
  }
  return bar;
}

json classes_json(const std::map<NClass, std::size_t>& classes) {
  json out = json::array();
  for (const auto& [c, mult] : classes) out.push_back({{"u", c.u}, {"len", c.len}, {"mult", mult}});
  return out;
}

std::map<NClass, std::size_t> parse_classes(const json& j) {
  std::map<NClass, std::size_t> out;
  for (const auto& e : get_array(j, "classes")) {
    std::size_t mult = get_nat(member(e, "mult"), "mult");
    if (mult == 0) throw InvalidArgument("class multiplicity must be positive");
    out[NClass{get_nat(member(e, "u"), "u"), get_nat(member(e, "len"), "len")}] += mult;
  }
  return out;
}

std::string dump(const json& j) { return j.dump() + "\n"; }

}  // namespace

Instance parse_instance(std::string_view text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("instance must be a JSON object");
  Field field = parse_field(member(doc, "field"));

  Instance inst;
  const json& qj = member(doc, "quiver");
  Quiver q;
  if (qj.is_object() && qj.contains("affine")) {
    const json& aj = qj.at("affine");
    std::size_t n = get_nat(member(aj, "n"), "affine.n");
    std::vector<Orientation> orientation;
    for (const auto& o : get_array(member(aj, "orientation"), "affine.orientation")) {
      std::size_t bit = get_nat(o, "orientation entry");
      if (bit > 1) throw ParseError("orientation entries must be 0 (cw) or 1 (ccw)");
      orientation.push_back(bit == 0 ? Orientation::cw : Orientation::ccw);
    }
    inst.affine = AffineQuiver(n, std::move(orientation));
    q = to_quiver(*inst.affine);
  } else {
    std::size_t vertices = get_nat(member(qj, "vertices"), "quiver.vertices");
    std::vector<Edge> edges;
    for (const auto& e : get_array(member(qj, "edges"), "quiver.edges"))
      edges.push_back({get_nat(member(e, "src"), "src"), get_nat(member(e, "dst"), "dst")});
    q = Quiver(vertices, std::move(edges));
  }

  std::vector<std::size_t> dims;
  for (const auto& d : get_array(member(doc, "dims"), "dims")) dims.push_back(get_nat(d, "dims entry"));
  if (dims.size() != q.vertex_count())
    throw InvalidArgument("dims has " + std::to_string(dims.size()) + " entries for " +
                          std::to_string(q.vertex_count()) + " vertices");

  std::vector<std::optional<Matrix>> mats(q.edge_count());
  for (const auto& mj : get_array(member(doc, "matrices"), "matrices")) {
    std::size_t e = get_nat(member(mj, "edge"), "matrices.edge");
    if (e >= q.edge_count()) throw InvalidArgument("matrix for nonexistent edge " + std::to_string(e));
    if (mats[e]) throw InvalidArgument("edge " + std::to_string(e) + " has more than one matrix");
    const json& rows = get_array(member(mj, "rows"), "matrices.rows");
    std::size_t cols = rows.empty() ? dims[q.edge(e).src] : get_array(rows.front(), "matrix row").size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const json& row = get_array(rows[r], "matrix row");
      if (row.size() != cols)
        throw InvalidArgument("edge " + std::to_string(e) + ": matrix rows have different lengths");
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, parse_entry(row[c], field));
    }
    mats[e] = std::move(m);
  }
  inst.rep = Representation{q, field, std::move(dims), {}};
  for (std::size_t e = 0; e < mats.size(); ++e) {
    if (!mats[e]) throw InvalidArgument("edge " + std::to_string(e) + " has no matrix");
    inst.rep.mats.push_back(std::move(*mats[e]));
  }
  require_valid(inst.rep);
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  const Representation& v = inst.rep;
  json doc;
  doc["field"] = field_json(v.field);
  if (inst.affine) {
    json orientation = json::array();
    for (auto o : inst.affine->orientation) orientation.push_back(o == Orientation::cw ? 0 : 1);
    doc["quiver"] = {{"affine", {{"n", inst.affine->n}, {"orientation", orientation}}}};
  } else {
    json edges = json::array();
    for (const auto& e : v.quiver.edges()) edges.push_back({{"src", e.src}, {"dst", e.dst}});
    doc["quiver"] = {{"vertices", v.quiver.vertex_count()}, {"edges", edges}};
  }
  doc["dims"] = v.dims;
  json mats = json::array();
  for (std::size_t e = 0; e < v.mats.size(); ++e) mats.push_back({{"edge", e}, {"rows", matrix_rows(v.mats[e])}});
  doc["matrices"] = mats;
  return dump(doc);
}

bool operator==(const Report& a, const Report& b) {
  bool hn_equal = a.hn.has_value() == b.hn.has_value() && (!a.hn || same_steps(*a.hn, *b.hn));
  return hn_equal && a.barcode == b.barcode && a.window == b.window && a.d_inf == b.d_inf &&
         a.classes == b.classes && a.oracle_agrees == b.oracle_agrees;
}

std::string serialize_report(const Report& report) {
  json doc = json::object();
  if (report.barcode) doc["barcode"] = barcode_json(*report.barcode);
  if (report.hn) {
    json steps = json::array();
    for (const auto& s : report.hn->steps) steps.push_back({{"slope", to_string(s.slope)}, {"quotient_dims", s.quotient_dims}});
    doc["hn"] = steps;
  }
  if (report.window) doc["window"] = *report.window;
  if (report.d_inf) doc["d_inf"] = *report.d_inf;
  if (report.classes) doc["classes"] = classes_json(*report.classes);
  if (report.oracle_agrees) doc["oracle_agrees"] = *report.oracle_agrees;
  return dump(doc);
}

Report parse_report(std::string_view text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("report must be a JSON object");
  Report r;
  if (doc.contains("barcode")) r.barcode = parse_barcode(doc.at("barcode"));
  if (doc.contains("hn")) {
    HNReport hn;
    for (const auto& s : get_array(doc.at("hn"), "hn")) {
      HNStep step;
      try {
        step.slope = parse_rational(get_as<std::string>(member(s, "slope"), "slope"));
      } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
      }
      for (const auto& d : get_array(member(s, "quotient_dims"), "quotient_dims"))
        step.quotient_dims.push_back(get_nat(d, "quotient_dims entry"));
      hn.steps.push_back(std::move(step));
    }
    r.hn = std::move(hn);
  }
  if (doc.contains("window")) r.window = get_nat(doc.at("window"), "window");
  if (doc.contains("d_inf")) r.d_inf = get_nat(doc.at("d_inf"), "d_inf");
  if (doc.contains("classes")) r.classes = parse_classes(doc.at("classes"));
  if (doc.contains("oracle_agrees")) r.oracle_agrees = get_as<bool>(doc.at("oracle_agrees"), "oracle_agrees");
  return r;
}

std::string serialize_truth(const Barcode& truth) {
  json doc;
  doc["kind"] = "persistence";
  doc["barcode"] = barcode_json(truth);
  return dump(doc);
}

std::string serialize_truth(const AffineTruth& truth) {
  json doc;
  doc["kind"] = "affine";
  doc["d_inf"] = truth.d_inf();
  doc["classes"] = classes_json(truth.classes);
  json tubes = json::array();
  for (const auto& t : truth.tubes) tubes.push_back({{"lambda", entry_json(t.lambda)}, {"w", t.w}});
  doc["tubes"] = tubes;
  return dump(doc);
}

Barcode parse_persistence_truth(std::string_view text) {
  json doc = parse_json(text);
  if (get_as<std::string>(member(doc, "kind"), "kind") != "persistence")
    throw ParseError("not a persistence ground-truth file");
  return parse_barcode(member(doc, "barcode"));
}

AffineTruth parse_affine_truth(std::string_view text, const Field& field) {
  json doc = parse_json(text);
  if (get_as<std::string>(member(doc, "kind"), "kind") != "affine") throw ParseError("not an affine ground-truth file");
  AffineTruth truth;
  truth.classes = parse_classes(member(doc, "classes"));
  for (const auto& t : get_array(member(doc, "tubes"), "tubes"))
    truth.tubes.push_back({parse_entry(member(t, "lambda"), field), get_nat(member(t, "w"), "w")});
  return truth;
}

}  // namespace hnzz
