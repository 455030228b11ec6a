#include "vortex/model_io.hpp"
#include "vortex/report.hpp"

#include <cctype>
#include <climits>
#include <fstream>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "vortex/errors.hpp"

namespace vortex {

namespace {

using json = nlohmann::ordered_json;

struct Position {
  std::size_t line = 0;
  std::size_t column = 0;
  std::string raw;  // number tokens only
};

// Source positions of every value, keyed by JSON pointer. Runs on text that
// nlohmann has already accepted, so it only has to track structure. Floating
// point literals are rejected here because this is the only place that still
// sees the token text.
class PositionIndex {
 public:
  explicit PositionIndex(std::string_view text) : text_(text) {
    skip_ws();
    value("");
  }

  Position at(const std::string& pointer) const {
    auto it = pos_.find(pointer);
    return it == pos_.end() ? Position{} : it->second;
  }

 private:
  void advance() {
    if (text_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(text_[i_]) & 0xC0) != 0x80) {
      ++col_;  // count UTF-8 lead bytes only
    }
    ++i_;
  }

  void skip_ws() {
    while (i_ < text_.size() && (text_[i_] == ' ' || text_[i_] == '\t' || text_[i_] == '\n' || text_[i_] == '\r')) advance();
  }

  std::string string_token() {
    std::string out;
    advance();  // opening quote
    while (text_[i_] != '"') {
      if (text_[i_] == '\\') {
        advance();
        out.push_back(text_[i_] == 'n' ? '\n' : text_[i_]);
      } else {
        out.push_back(text_[i_]);
      }
      advance();
    }
    advance();
    return out;
  }

  static std::string escape(const std::string& key) {
    std::string out;
    for (char c : key) {
      if (c == '~') {
        out += "~0";
      } else if (c == '/') {
        out += "~1";
      } else {
        out.push_back(c);
      }
    }
    return out;
  }

  void value(const std::string& ptr) {
    Position here{line_, col_, {}};
    const char c = text_[i_];
    if (c == '{') {
      pos_[ptr] = here;
      advance();
      skip_ws();
      while (text_[i_] != '}') {
        const std::string key = string_token();
        skip_ws();
        advance();  // ':'
        skip_ws();
        value(ptr + "/" + escape(key));
        skip_ws();
        if (text_[i_] == ',') {
          advance();
          skip_ws();
        }
      }
      advance();
    } else if (c == '[') {
      pos_[ptr] = here;
      advance();
      skip_ws();
      for (int n = 0; text_[i_] != ']'; ++n) {
        value(ptr + "/" + std::to_string(n));
        skip_ws();
        if (text_[i_] == ',') {
          advance();
          skip_ws();
        }
      }
      advance();
    } else if (c == '"') {
      pos_[ptr] = here;
      string_token();
    } else if (c == '-' || (c >= '0' && c <= '9')) {
      std::string raw;
      while (i_ < text_.size() && std::string_view("+-0123456789.eE").find(text_[i_]) != std::string_view::npos) {
        raw.push_back(text_[i_]);
        advance();
      }
      if (raw.find_first_of(".eE") != std::string::npos) {
        throw ParseError("floating-point number " + raw + " is not an exact input; write rationals as \"p/q\" strings",
                         here.line, here.column);
      }
      here.raw = raw;
      pos_[ptr] = here;
    } else {
      pos_[ptr] = here;
      while (i_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[i_]))) advance();
    }
  }

  std::string_view text_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  std::map<std::string, Position> pos_;
};

class Reader {
 public:
  Reader(const json& root, PositionIndex idx) : root_(root), idx_(std::move(idx)) {}

  [[noreturn]] void fail(const std::string& ptr, const std::string& msg) const {
    const auto p = idx_.at(ptr);
    throw ParseError((ptr.empty() ? std::string("document") : ptr) + ": " + msg, p.line, p.column);
  }

  const json& get(const std::string& ptr) const { return root_.at(json::json_pointer(ptr)); }
  bool has(const std::string& ptr) const { return root_.contains(json::json_pointer(ptr)); }

  const json& object(const std::string& ptr, std::initializer_list<const char*> allowed) const {
    const json& j = get(ptr);
    if (!j.is_object()) fail(ptr, "expected an object");
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, v] : j.items()) {
      if (!ok.count(key)) fail(ptr + "/" + key, "unknown key \"" + key + "\"");
    }
    return j;
  }

  void require(const std::string& ptr) const {
    if (!has(ptr)) {
      const auto slash = ptr.rfind('/');
      fail(ptr.substr(0, slash), "missing key \"" + ptr.substr(slash + 1) + "\"");
    }
  }

  const json& array(const std::string& ptr) const {
    require(ptr);
    const json& j = get(ptr);
    if (!j.is_array()) fail(ptr, "expected an array");
    return j;
  }

  long integer(const std::string& ptr) const {
    require(ptr);
    const json& j = get(ptr);
    if (j.is_number_integer() && !j.is_number_unsigned()) return j.get<long>();
    if (j.is_number_unsigned() && j.get<unsigned long>() <= static_cast<unsigned long>(LONG_MAX)) {
      return static_cast<long>(j.get<unsigned long>());
    }
    fail(ptr, "expected an integer that fits in 64 bits");
  }

  int small_int(const std::string& ptr) const {
    const long v = integer(ptr);
    if (v < -1000000 || v > 1000000) fail(ptr, "integer out of range");
    return static_cast<int>(v);
  }

  Rational rational(const std::string& ptr) const {
    require(ptr);
    const json& j = get(ptr);
    try {
      if (j.is_string()) return parse_rational(j.get<std::string>());
      if (j.is_number()) return parse_rational(idx_.at(ptr).raw);
    } catch (const ParseError& e) {
      fail(ptr, e.what());
    }
    fail(ptr, "expected a rational as a \"p/q\" string");
  }

  bool boolean(const std::string& ptr) const {
    const json& j = get(ptr);
    if (!j.is_boolean()) fail(ptr, "expected true or false");
    return j.get<bool>();
  }

 private:
  const json& root_;
  PositionIndex idx_;
};

ManifoldDescriptor read_manifold(const Reader& rd) {
  const std::string p = "/manifold";
  rd.require(p);
  if (!rd.get(p).is_object()) rd.fail(p, "expected an object");
  rd.require(p + "/type");
  const json& type_j = rd.get(p + "/type");
  if (!type_j.is_string()) rd.fail(p + "/type", "expected a string");
  const std::string type = type_j.get<std::string>();
  auto lambda_or_one = [&](const std::string& key) {
    return rd.has(p + "/" + key) ? rd.rational(p + "/" + key) : Rational(1);
  };
  ManifoldDescriptor man;
  if (type == "projective_space") {
    rd.object(p, {"type", "m", "lambda"});
    man = ProjectiveSpace{rd.small_int(p + "/m"), lambda_or_one("lambda")};
  } else if (type == "grassmannian") {
    rd.object(p, {"type", "n", "k", "lambda"});
    man = Grassmannian{rd.small_int(p + "/n"), rd.small_int(p + "/k"), lambda_or_one("lambda")};
  } else if (type == "hirzebruch") {
    rd.object(p, {"type", "k", "lambda", "delta"});
    man = Hirzebruch{rd.integer(p + "/k"), rd.rational(p + "/lambda"), rd.rational(p + "/delta")};
  } else if (type == "abelian") {
    rd.object(p, {"type", "m", "lambdas"});
    AbelianVariety a;
    const auto& ls = rd.array(p + "/lambdas");
    for (std::size_t i = 0; i < ls.size(); ++i) a.lambdas.push_back(rd.rational(p + "/lambdas/" + std::to_string(i)));
    a.m = static_cast<int>(a.lambdas.size());
    if (rd.has(p + "/m") && rd.small_int(p + "/m") != a.m) rd.fail(p + "/m", "m differs from the number of lambdas");
    man = a;
  } else if (type == "generic_pic_z") {
    rd.object(p, {"type", "m", "t", "lambda", "sections"});
    GenericPicZ g{rd.small_int(p + "/m"), rd.integer(p + "/t"), lambda_or_one("lambda"), {}};
    if (rd.has(p + "/sections") && !rd.get(p + "/sections").is_object()) rd.fail(p + "/sections", "expected an object");
    man = g;
  } else if (type == "generic_simply_connected") {
    rd.object(p, {"type", "m", "vol", "entries"});
    GenericSimplyConnected g{rd.small_int(p + "/m"), rd.rational(p + "/vol"), {}};
    const auto& es = rd.array(p + "/entries");
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::string e = p + "/entries/" + std::to_string(i);
      rd.object(e, {"r", "slope_vol", "c1_squared", "trivial"});
      BundleTableEntry entry;
      entry.r = rd.integer(e + "/r");
      entry.slope_vol = rd.rational(e + "/slope_vol");
      if (rd.has(e + "/c1_squared")) entry.c1_squared = rd.rational(e + "/c1_squared");
      if (rd.has(e + "/trivial")) entry.trivial = rd.boolean(e + "/trivial");
      g.entries.push_back(entry);
    }
    man = g;
  } else {
    rd.fail(p + "/type", "unknown manifold type \"" + type + "\"");
  }
  try {
    validate(man);
  } catch (const Error& e) {
    rd.fail(p, e.what());
  }
  return man;
}

// generic_pic_z section tables are objects keyed by degree; handled apart
// from read_manifold because the keys are data.
void read_pic_sections(const Reader& rd, ManifoldDescriptor& man) {
  auto* g = std::get_if<GenericPicZ>(&man);
  const std::string p = "/manifold/sections";
  if (!g || !rd.has(p)) return;
  for (const auto& [key, v] : rd.get(p).items()) {
    long d = 0;
    try {
      const Rational q = parse_rational(key);
      if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw ParseError("bad degree");
      d = q.get_num().get_si();
    } catch (const ParseError&) {
      rd.fail(p + "/" + key, "section table keys must be integer degrees");
    }
    g->sections[d] = rd.integer(p + "/" + key);
  }
}

BundleDescriptor read_bundle(const Reader& rd, const std::string& p) {
  const json& j = rd.get(p);
  if (!j.is_object() || j.size() != 1) rd.fail(p, "a bundle is one of {\"degree\"}, {\"bidegree\"}, {\"deltas\"}, {\"table\"}");
  const std::string key = j.begin().key();
  if (key == "degree") return Degree{rd.integer(p + "/degree")};
  if (key == "table") return TableIndex{rd.small_int(p + "/table")};
  if (key == "bidegree") {
    if (rd.array(p + "/bidegree").size() != 2) rd.fail(p + "/bidegree", "expected [a, b]");
    return Bidegree{rd.integer(p + "/bidegree/0"), rd.integer(p + "/bidegree/1")};
  }
  if (key == "deltas") {
    Deltas d;
    const auto& arr = rd.array(p + "/deltas");
    for (std::size_t i = 0; i < arr.size(); ++i) d.deltas.push_back(rd.integer(p + "/deltas/" + std::to_string(i)));
    return d;
  }
  rd.fail(p + "/" + key, "unknown bundle key \"" + key + "\"");
}

std::vector<BundleDescriptor> infer_principal(const Reader& rd, const WeightSystem& ws,
                                              const std::vector<BundleDescriptor>& bundles) {
  const int k = ws.k();
  const int n = ws.n();
  std::vector<std::optional<BundleDescriptor>> out(k);
  // A column equal to the unit vector e_a pins down P^a = L_j.
  for (int j = 0; j < n; ++j) {
    const auto col = ws.column(j);
    int hit = -1;
    bool unit = true;
    for (int a = 0; a < k; ++a) {
      if (col[a] == 1 && hit < 0) {
        hit = a;
      } else if (col[a] != 0) {
        unit = false;
      }
    }
    if (unit && hit >= 0 && !out[hit]) out[hit] = bundles[j];
  }
  std::vector<BundleDescriptor> principal;
  for (int a = 0; a < k; ++a) {
    if (!out[a]) rd.fail("", "cannot infer the principal bundle of circle factor " + std::to_string(a + 1) + "; add \"principal\"");
    principal.push_back(*out[a]);
  }
  return principal;
}

json rational_json(const Rational& q) { return to_short_string(q); }

json bundle_json(const BundleDescriptor& b) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Degree>) {
          return {{"degree", x.d}};
        } else if constexpr (std::is_same_v<T, Bidegree>) {
          return {{"bidegree", {x.a, x.b}}};
        } else if constexpr (std::is_same_v<T, Deltas>) {
          return {{"deltas", x.deltas}};
        } else {
          return {{"table", x.index}};
        }
      },
      b);
}

json manifold_json(const ManifoldDescriptor& man) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        json j;
        if constexpr (std::is_same_v<T, ProjectiveSpace>) {
          j = {{"type", "projective_space"}, {"m", x.m}, {"lambda", rational_json(x.lambda)}};
        } else if constexpr (std::is_same_v<T, Grassmannian>) {
          j = {{"type", "grassmannian"}, {"n", x.n}, {"k", x.k}, {"lambda", rational_json(x.lambda)}};
        } else if constexpr (std::is_same_v<T, Hirzebruch>) {
          j = {{"type", "hirzebruch"}, {"k", x.k}, {"lambda", rational_json(x.lambda)}, {"delta", rational_json(x.delta)}};
        } else if constexpr (std::is_same_v<T, AbelianVariety>) {
          j = {{"type", "abelian"}, {"lambdas", json::array()}};
          for (const auto& l : x.lambdas) j["lambdas"].push_back(rational_json(l));
        } else if constexpr (std::is_same_v<T, GenericPicZ>) {
          j = {{"type", "generic_pic_z"}, {"m", x.m}, {"t", x.t}, {"lambda", rational_json(x.lambda)}};
          if (!x.sections.empty()) {
            j["sections"] = json::object();
            for (const auto& [d, r] : x.sections) j["sections"][std::to_string(d)] = r;
          }
        } else {
          j = {{"type", "generic_simply_connected"}, {"m", x.m}, {"vol", rational_json(x.vol)}, {"entries", json::array()}};
          for (const auto& e : x.entries) {
            json entry = {{"r", e.r}, {"slope_vol", rational_json(e.slope_vol)}};
            if (e.c1_squared) entry["c1_squared"] = rational_json(*e.c1_squared);
            if (e.trivial) entry["trivial"] = true;
            j["entries"].push_back(entry);
          }
        }
        return j;
      },
      man);
}

std::size_t line_of(std::string_view text, std::size_t byte, std::size_t& column) {
  std::size_t line = 1;
  column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return line;
}

}  // namespace

ModelFile parse_model(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t column = 0;
    const std::size_t line = line_of(text, e.byte, column);
    std::string msg = e.what();
    if (const auto colon = msg.rfind(": "); colon != std::string::npos) msg = msg.substr(colon + 2);
    throw ParseError("malformed JSON: " + msg, line, column);
  }
  const Reader rd(root, PositionIndex(text));
  rd.object("", {"manifold", "weights", "tau", "e2", "bundles", "principal", "constraint", "analysis"});

  ModelFile out;
  out.model.manifold = read_manifold(rd);
  read_pic_sections(rd, out.model.manifold);

  const auto& w = rd.array("/weights");
  std::vector<std::vector<long>> rows;
  for (std::size_t a = 0; a < w.size(); ++a) {
    const std::string ra = "/weights/" + std::to_string(a);
    const auto& row = rd.array(ra);
    if (a > 0 && row.size() != rows[0].size()) rd.fail(ra, "weight rows must have equal length");
    std::vector<long> r;
    for (std::size_t j = 0; j < row.size(); ++j) r.push_back(rd.integer(ra + "/" + std::to_string(j)));
    rows.push_back(std::move(r));
  }
  if (rows.empty() || rows[0].empty()) rd.fail("/weights", "need at least one circle factor and one column");
  try {
    out.model.weights = WeightSystem(std::move(rows));
  } catch (const Error& e) {
    rd.fail("/weights", e.what());
  }

  const auto& tau = rd.array("/tau");
  for (std::size_t a = 0; a < tau.size(); ++a) out.model.tau.push_back(rd.rational("/tau/" + std::to_string(a)));
  if (static_cast<int>(out.model.tau.size()) != out.model.weights.k()) rd.fail("/tau", "need one entry per weight row");

  const Rational e2 = rd.rational("/e2");
  if (e2 <= 0) rd.fail("/e2", "e2 must be positive");
  out.model.inv_e2 = 1 / e2;

  const auto& bs = rd.array("/bundles");
  for (std::size_t j = 0; j < bs.size(); ++j) out.model.bundles.push_back(read_bundle(rd, "/bundles/" + std::to_string(j)));
  if (static_cast<int>(out.model.bundles.size()) != out.model.weights.n()) rd.fail("/bundles", "need one bundle per weight column");

  if (rd.has("/principal")) {
    const auto& ps = rd.array("/principal");
    for (std::size_t a = 0; a < ps.size(); ++a) out.model.principal.push_back(read_bundle(rd, "/principal/" + std::to_string(a)));
    if (static_cast<int>(out.model.principal.size()) != out.model.weights.k()) rd.fail("/principal", "need one entry per weight row");
  } else {
    out.model.principal = infer_principal(rd, out.model.weights, out.model.bundles);
  }

  if (rd.has("/constraint")) {
    rd.object("/constraint", {"degree"});
    out.constraint_degree = rd.integer("/constraint/degree");
    if (*out.constraint_degree < 1) rd.fail("/constraint/degree", "constraint degree must be positive");
  }
  if (rd.has("/analysis")) {
    const auto& an = rd.array("/analysis");
    for (std::size_t i = 0; i < an.size(); ++i) {
      const std::string p = "/analysis/" + std::to_string(i);
      if (!an[i].is_string()) rd.fail(p, "expected a section name");
      const auto name = an[i].get<std::string>();
      if (!section_from_name(name)) rd.fail(p, "unknown analysis section \"" + name + "\"");
      out.analysis.push_back(name);
    }
  }
  validate(out.model);
  return out;
}

ModelFile load_model_file(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    buf << in.rdbuf();
  }
  return parse_model(buf.str());
}

std::string model_to_json(const ModelFile& file) {
  const auto& m = file.model;
  json j;
  j["manifold"] = manifold_json(m.manifold);
  j["weights"] = m.weights.rows();
  j["tau"] = json::array();
  for (const auto& t : m.tau) j["tau"].push_back(rational_json(t));
  if (m.inv_e2 == 0) throw PreconditionError("the strong-coupling limit has no model file form");
  j["e2"] = rational_json(1 / m.inv_e2);
  j["bundles"] = json::array();
  for (const auto& b : line_bundles(m)) j["bundles"].push_back(bundle_json(b));
  j["principal"] = json::array();
  for (const auto& b : m.principal) j["principal"].push_back(bundle_json(b));
  if (file.constraint_degree) j["constraint"] = {{"degree", *file.constraint_degree}};
  if (!file.analysis.empty()) j["analysis"] = file.analysis;
  return j.dump(2) + "\n";
}

}  // namespace vortex
