#include "tdlc/scenario.hpp"

#include "tdlc/finite.hpp"
#include "tdlc/padic.hpp"
#include "tdlc/product.hpp"
#include "tdlc/shift.hpp"

#include <json.hpp>

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace tdlc::scenario {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) { throw InvalidInput(where + ": " + what); }

void allow(const Json& j, const std::string& where, std::initializer_list<const char*> keys) {
  if (!j.is_object()) bad(where, "expected an object");
  std::set<std::string> ok(keys.begin(), keys.end());
  for (const auto& [k, v] : j.items())
    if (!ok.count(k)) bad(where, "unknown field '" + k + "'");
}

const Json& need(const Json& j, const std::string& where, const char* key) {
  if (!j.contains(key)) bad(where, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string get_string(const Json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string");
  return j.get<std::string>();
}

long get_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<long>();
}

std::size_t get_count(const Json& j, const std::string& where) {
  long v = get_int(j, where);
  if (v < 0) bad(where, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

const Json& get_array(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  return j;
}

// ---- finite groups and maps ----

finite::Group catalog_group(const std::string& name, const std::string& where) {
  static const std::regex cyclic("Z([0-9]+)"), dihedral("D([0-9]+)");
  std::smatch m;
  if (name == "1") return finite::Group::trivial();
  if (name == "S3") return finite::Group::symmetric3();
  if (name == "Q8") return finite::Group::quaternion();
  if (name == "A4") return finite::Group::alternating4();
  if (std::regex_match(name, m, cyclic)) return finite::Group::cyclic(std::stoi(m[1]));
  if (std::regex_match(name, m, dihedral)) return finite::Group::dihedral(std::stoi(m[1]));
  bad(where, "unknown group '" + name + "' (use 1, S3, Q8, A4, Zn, Dn or a table)");
}

int element(const finite::Group& g, const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    long v = j.get<long>();
    if (v < 0 || v >= g.order()) bad(where, "element index out of range");
    return static_cast<int>(v);
  }
  std::string s = get_string(j, where);
  for (int a = 0; a < g.order(); ++a)
    if (g.element_name(a) == s) return a;
  bad(where, "no element named '" + s + "'");
}

finite::Elements element_set(const finite::Group& g, const Json& j, const std::string& where) {
  finite::Elements e;
  for (const auto& x : get_array(j, where)) e.set(element(g, x, where));
  return e;
}

// extends generator images to the whole group, rejecting inconsistent data
finite::Map extend(const finite::Group& g, const std::map<int, int>& images, const std::string& where) {
  finite::Map m(g.order(), -1);
  m[g.identity()] = g.identity();
  std::vector<int> queue{g.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& [gen, img] : images) {
      int y = g.mul(queue[i], gen), v = g.mul(m[queue[i]], img);
      if (m[y] == -1) {
        m[y] = v;
        queue.push_back(y);
      } else if (m[y] != v) {
        bad(where, "generator images do not define a homomorphism");
      }
    }
  if (static_cast<int>(queue.size()) != g.order()) bad(where, "the given generators do not generate the group");
  if (!finite::is_homomorphism(g, m)) bad(where, "generator images do not define a homomorphism");
  return m;
}

finite::Map parse_map(const finite::Group& g, const Json& j, const std::string& where) {
  if (j.is_string()) {
    if (j.get<std::string>() != "identity") bad(where, "expected \"identity\", an array or {\"generators\": ...}");
    return finite::identity_map(g);
  }
  if (j.is_array()) {
    if (static_cast<int>(j.size()) != g.order()) bad(where, "map must list the image of every element");
    finite::Map m;
    for (const auto& x : j) m.push_back(element(g, x, where));
    if (!finite::is_homomorphism(g, m)) bad(where, "map is not a homomorphism");
    return m;
  }
  allow(j, where, {"generators"});
  std::map<int, int> images;
  for (const auto& [k, v] : need(j, where, "generators").items()) images[element(g, Json(k), where)] = element(g, v, where);
  return extend(g, images, where);
}

finite::Group parse_group(const Json& j, const std::string& where) {
  const bool has_group = j.contains("group"), has_table = j.contains("table");
  if (has_group == has_table) bad(where, "give exactly one of 'group' and 'table'");
  if (has_group) {
    if (j.contains("names")) bad(where, "'names' only applies to 'table'");
    return catalog_group(get_string(j.at("group"), where + ".group"), where);
  }
  std::vector<std::vector<int>> table;
  for (const auto& row : get_array(j.at("table"), where + ".table")) {
    std::vector<int> r;
    for (const auto& x : get_array(row, where + ".table")) r.push_back(static_cast<int>(get_int(x, where + ".table")));
    table.push_back(std::move(r));
  }
  std::vector<std::string> names;
  if (j.contains("names"))
    for (const auto& x : get_array(j.at("names"), where + ".names")) names.push_back(get_string(x, where + ".names"));
  if (table.empty() || table.size() > kMaxFiniteOrder) bad(where, "table size out of range");
  return finite::Group(std::move(table), std::move(names));
}

// ---- systems ----

SystemPtr parse_model(const Json& j, const std::string& where, std::initializer_list<const char*> extra);

std::vector<const char*> with(std::initializer_list<const char*> base, std::initializer_list<const char*> extra) {
  std::vector<const char*> out(base);
  out.insert(out.end(), extra);
  return out;
}

void allow_list(const Json& j, const std::string& where, const std::vector<const char*>& keys) {
  std::set<std::string> ok(keys.begin(), keys.end());
  for (const auto& [k, v] : j.items())
    if (!ok.count(k)) bad(where, "unknown field '" + k + "'");
}

std::string model_name(const Json& j, const std::string& where, const std::string& fallback) {
  return j.contains("name") ? get_string(j.at("name"), where + ".name") : fallback;
}

SystemPtr parse_finite(const Json& j, const std::string& where) {
  finite::Group g = parse_group(j, where);
  std::string gname = j.contains("group") ? j.at("group").get<std::string>() : "G";
  finite::Map m = j.contains("map") ? parse_map(g, j.at("map"), where + ".map") : finite::identity_map(g);
  return finite::make_system(std::move(g), std::move(m), model_name(j, where, gname));
}

SystemPtr parse_padic(const Json& j, const std::string& where) {
  long p = get_int(need(j, where, "prime"), where + ".prime");
  long d = get_int(need(j, where, "dim"), where + ".dim");
  if (p < 2) bad(where + ".prime", "must be a prime");
  if (d < 1 || d > 16) bad(where + ".dim", "must be between 1 and 16");
  const Json& rows = get_array(need(j, where, "matrix"), where + ".matrix");
  if (static_cast<long>(rows.size()) != d) bad(where + ".matrix", "expected dim rows");
  linalg::Matrix a(d, d);
  for (long r = 0; r < d; ++r) {
    const Json& row = get_array(rows[r], where + ".matrix");
    if (static_cast<long>(row.size()) != d) bad(where + ".matrix", "expected dim entries per row");
    for (long c = 0; c < d; ++c) {
      const Json& x = row[c];
      a(r, c) = x.is_number_integer() ? Rational(x.get<long>()) : parse_rational(get_string(x, where + ".matrix"));
    }
  }
  return padic::make_system(Integer(p), a, model_name(j, where, "Q" + std::to_string(p) + "^" + std::to_string(d)));
}

shift::TailMode parse_mode(const std::string& s, const std::string& where) {
  if (s == "compact") return shift::TailMode::compact;
  if (s == "laurent") return shift::TailMode::laurent;
  if (s == "discrete") return shift::TailMode::discrete;
  bad(where, "tail_mode must be compact, laurent or discrete");
}

finite::Group alphabet_group(const Json& j, const std::string& where) {
  std::vector<int> orders;
  for (const auto& x : get_array(j, where)) {
    long n = get_int(x, where);
    if (n < 1) bad(where, "cyclic orders must be positive");
    orders.push_back(static_cast<int>(n));
  }
  if (orders.empty()) bad(where, "alphabet needs at least one cyclic factor");
  long total = 1;
  for (int n : orders) total *= n;
  if (total > 64) bad(where, "alphabet larger than 64 elements");
  return orders.size() == 1 ? finite::Group::cyclic(orders[0]) : finite::Group::abelian(orders);
}

SystemPtr parse_shift(const Json& j, const std::string& where) {
  finite::Group g = alphabet_group(need(j, where, "alphabet"), where + ".alphabet");
  auto mode = parse_mode(get_string(need(j, where, "tail_mode"), where + ".tail_mode"), where + ".tail_mode");
  long k = get_int(need(j, where, "shift"), where + ".shift");
  finite::Map sigma = j.contains("sigma") ? parse_map(g, j.at("sigma"), where + ".sigma") : finite::identity_map(g);
  std::string fallback = "F^Z";
  return shift::make_system(std::move(g), std::move(sigma), k, mode, model_name(j, where, fallback));
}

SystemPtr parse_model(const Json& j, const std::string& where, std::initializer_list<const char*> extra) {
  if (!j.is_object()) bad(where, "expected an object");
  std::string b = get_string(need(j, where, "backend"), where + ".backend");
  if (b == "finite") {
    allow_list(j, where, with({"backend", "name", "group", "table", "names", "map"}, extra));
    return parse_finite(j, where);
  }
  if (b == "padic") {
    allow_list(j, where, with({"backend", "name", "prime", "dim", "matrix"}, extra));
    return parse_padic(j, where);
  }
  if (b == "shift") {
    allow_list(j, where, with({"backend", "name", "alphabet", "tail_mode", "shift", "sigma"}, extra));
    return parse_shift(j, where);
  }
  if (b == "product") {
    allow_list(j, where, with({"backend", "name", "factors"}, extra));
    const Json& f = get_array(need(j, where, "factors"), where + ".factors");
    if (f.size() != 2) bad(where + ".factors", "a product has exactly two factors");
    SystemPtr a = parse_model(f[0], where + ".factors[0]", {}), c = parse_model(f[1], where + ".factors[1]", {});
    return product::make_system(a, c, model_name(j, where, ""));
  }
  bad(where + ".backend", "must be finite, padic, shift or product");
}

// ---- subgroups ----

using Named = std::vector<std::pair<std::string, Subgroup>>;

const Subgroup& lookup(const Named& named, const std::string& name, const std::string& where) {
  for (const auto& [n, s] : named)
    if (n == name) return s;
  bad(where, "unknown subgroup '" + name + "'");
}

int alphabet_subgroup(const shift::ShiftSystem& s, const Json& j, const std::string& where) {
  const auto& a = s.alphabet();
  if (j.is_string()) {
    std::string v = j.get<std::string>();
    if (v == "full") return a.full;
    if (v == "trivial") return a.zero;
    bad(where, "expected \"full\", \"trivial\" or a list of generators");
  }
  return a.id(a.group->generated(element_set(*a.group, j, where)));
}

linalg::Matrix vectors(const Json& j, std::size_t dim, const std::string& where) {
  const Json& arr = get_array(j, where);
  linalg::Matrix m(dim, arr.size());
  for (std::size_t c = 0; c < arr.size(); ++c) {
    const Json& v = get_array(arr[c], where);
    if (v.size() != dim) bad(where, "vector length differs from dim");
    for (std::size_t r = 0; r < dim; ++r)
      m(r, c) = v[r].is_number_integer() ? Rational(v[r].get<long>()) : parse_rational(get_string(v[r], where));
  }
  return m;
}

Subgroup parse_subgroup(const System& sys, const Json& j, const Named& named, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  std::string kind = get_string(need(j, where, "kind"), where + ".kind");
  if (kind == "whole" || kind == "trivial" || kind == "kernel") {
    allow(j, where, {"kind"});
    return kind == "whole" ? sys.whole() : kind == "trivial" ? sys.trivial() : sys.kernel();
  }
  if (kind == "base") {
    allow(j, where, {"kind", "k"});
    return sys.base(get_count(need(j, where, "k"), where + ".k"));
  }
  if (kind == "image" || kind == "preimage") {
    allow(j, where, {"kind", "of"});
    const Subgroup& s = lookup(named, get_string(need(j, where, "of"), where + ".of"), where);
    return kind == "image" ? image(sys, s) : preimage(sys, s);
  }
  if (kind == "intersection" || kind == "product") {
    allow(j, where, {"kind", "of"});
    const Json& of = get_array(need(j, where, "of"), where + ".of");
    if (of.size() != 2) bad(where + ".of", "expected two subgroup names");
    const Subgroup& a = lookup(named, get_string(of[0], where), where);
    const Subgroup& b = lookup(named, get_string(of[1], where), where);
    return kind == "intersection" ? intersect(sys, a, b) : set_product(sys, a, b);
  }
  if (auto f = dynamic_cast<const finite::FiniteSystem*>(&sys)) {
    if (kind == "elements") {
      allow(j, where, {"kind", "elements"});
      auto e = element_set(f->group(), need(j, where, "elements"), where + ".elements");
      if (!f->group().is_subgroup(e)) bad(where, "elements do not form a subgroup");
      return f->handle(e);
    }
    if (kind == "generated") {
      allow(j, where, {"kind", "generators"});
      return f->handle(f->group().generated(element_set(f->group(), need(j, where, "generators"), where)));
    }
  }
  if (auto p = dynamic_cast<const padic::PAdicSystem*>(&sys)) {
    const std::size_t d = p->dim();
    if (kind == "subspace" || kind == "lattice") {
      allow(j, where, {"kind", "gens"});
      linalg::Matrix m = vectors(need(j, where, "gens"), d, where + ".gens");
      return kind == "subspace" ? p->subspace(m) : p->lattice(m);
    }
    if (kind == "sum") {
      allow(j, where, {"kind", "subspace", "lattice"});
      return p->make(vectors(need(j, where, "subspace"), d, where + ".subspace"),
                     vectors(need(j, where, "lattice"), d, where + ".lattice"));
    }
  }
  if (auto s = dynamic_cast<const shift::ShiftSystem*>(&sys)) {
    if (kind == "constant") {
      allow(j, where, {"kind", "value"});
      return s->constant(alphabet_subgroup(*s, need(j, where, "value"), where + ".value"));
    }
    if (kind == "window") {
      allow(j, where, {"kind", "left", "start", "values", "right"});
      std::vector<int> vals;
      for (const auto& v : get_array(need(j, where, "values"), where + ".values"))
        vals.push_back(alphabet_subgroup(*s, v, where + ".values"));
      return s->window(alphabet_subgroup(*s, need(j, where, "left"), where + ".left"),
                       get_int(need(j, where, "start"), where + ".start"), std::move(vals),
                       alphabet_subgroup(*s, need(j, where, "right"), where + ".right"));
    }
  }
  if (auto pr = dynamic_cast<const product::ProductSystem*>(&sys)) {
    if (kind == "pair") {
      allow(j, where, {"kind", "first", "second"});
      return make_pair(parse_subgroup(*pr->first(), need(j, where, "first"), named, where + ".first"),
                       parse_subgroup(*pr->second(), need(j, where, "second"), named, where + ".second"));
    }
  }
  bad(where, "subgroup kind '" + kind + "' is not available for this backend");
}

const std::set<std::string> kCheckTypes{"addition", "scale-link", "lower-bound", "monotonicity", "identities",
                                        "stable-below"};
const std::set<std::string> kComputations{"entropy", "scale", "nub", "tidy", "cotraj"};

Check parse_check(const Json& j, const Named& named, const std::string& where) {
  allow(j, where, {"type", "args", "expect"});
  Check c;
  c.type = get_string(need(j, where, "type"), where + ".type");
  if (j.contains("expect")) {
    c.expect = get_string(j.at("expect"), where + ".expect");
    if (c.expect != "PASS" && c.expect != "SKIPPED") bad(where + ".expect", "must be PASS or SKIPPED");
  }
  if (!kCheckTypes.count(c.type)) bad(where + ".type", "unknown check '" + c.type + "'");
  if (j.contains("args")) {
    const Json& a = j.at("args");
    allow(a, where + ".args", {"subgroup", "subgroups"});
    if (a.contains("subgroup")) c.subgroups.push_back(get_string(a.at("subgroup"), where + ".args.subgroup"));
    if (a.contains("subgroups"))
      for (const auto& x : get_array(a.at("subgroups"), where + ".args.subgroups"))
        c.subgroups.push_back(get_string(x, where + ".args.subgroups"));
  }
  for (const auto& n : c.subgroups) lookup(named, n, where + ".args");
  std::size_t want = c.type == "scale-link" ? 0 : c.type == "stable-below" ? 2 : 1;
  if (c.type == "lower-bound" ? c.subgroups.empty() : c.type == "identities" ? c.subgroups.size() > 1
                                                                              : c.subgroups.size() != want)
    bad(where, "wrong number of subgroup arguments for '" + c.type + "'");
  return c;
}

}  // namespace

Rational parse_rational(const std::string& s) {
  static const std::regex re(R"(\s*([+-]?[0-9]+)\s*(?:/\s*([0-9]+)(?:\s*\^\s*([0-9]+))?)?\s*)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw InvalidInput("not a rational number: '" + s + "'");
  Integer num(m[1].str()), den(1);
  if (m[2].matched) {
    den = Integer(m[2].str());
    if (m[3].matched) {
      unsigned long k = std::stoul(m[3].str());
      if (k > 4096) throw InvalidInput("exponent too large in '" + s + "'");
      den = ipow(den, k);
    }
  }
  if (den == 0) throw InvalidInput("zero denominator in '" + s + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

const Subgroup& Scenario::subgroup(const std::string& name) const { return lookup(subgroups, name, id); }

Scenario parse(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) bad("scenario", "expected an object");
  if (get_int(need(j, "scenario", "schema"), "scenario.schema") != kSchemaVersion)
    bad("scenario.schema", "unsupported schema version");
  Scenario sc;
  sc.id = get_string(need(j, "scenario", "id"), "scenario.id");
  static const std::regex id_re("[a-z0-9_]+");
  if (!std::regex_match(sc.id, id_re)) bad("scenario.id", "use lowercase letters, digits and underscores");
  const std::string where = sc.id;
  try {
    sc.system = parse_model(j, where,
                            {"schema", "id", "description", "subgroups", "checks", "compute", "probe", "tidy_probe",
                             "resolution", "expect"});
    if (j.contains("description")) sc.description = get_string(j.at("description"), where + ".description");
    if (j.contains("subgroups")) {
      const Json& subs = j.at("subgroups");
      if (!subs.is_object()) bad(where + ".subgroups", "expected an object");
      for (const auto& [name, spec] : subs.items()) {
        for (const auto& [n, s] : sc.subgroups)
          if (n == name) bad(where + ".subgroups", "duplicate name '" + name + "'");
        sc.subgroups.emplace_back(name, parse_subgroup(*sc.system, spec, sc.subgroups, where + ".subgroups." + name));
      }
    }
    if (j.contains("checks"))
      for (const auto& c : get_array(j.at("checks"), where + ".checks"))
        sc.checks.push_back(parse_check(c, sc.subgroups, where + ".checks"));
    if (j.contains("compute"))
      for (const auto& c : get_array(j.at("compute"), where + ".compute")) {
        std::string v = get_string(c, where + ".compute");
        if (!kComputations.count(v)) bad(where + ".compute", "unknown computation '" + v + "'");
        sc.compute.push_back(v);
      }
    if (j.contains("probe")) sc.probe = get_count(j.at("probe"), where + ".probe");
    if (j.contains("tidy_probe")) sc.tidy_probe = get_count(j.at("tidy_probe"), where + ".tidy_probe");
    if (j.contains("resolution")) sc.resolution = get_count(j.at("resolution"), where + ".resolution");
    if (j.contains("expect")) {
      const Json& e = j.at("expect");
      allow(e, where + ".expect", {"entropy", "scale", "nub"});
      if (e.contains("entropy")) sc.expect.entropy = get_string(e.at("entropy"), where + ".expect.entropy");
      if (e.contains("scale")) sc.expect.scale = get_string(e.at("scale"), where + ".expect.scale");
      if (e.contains("nub")) sc.expect.nub = get_string(e.at("nub"), where + ".expect.nub");
      if (sc.expect.nub && *sc.expect.nub != "trivial" && *sc.expect.nub != "whole")
        lookup(sc.subgroups, *sc.expect.nub, where + ".expect.nub");
    }
  } catch (const InvalidInput&) {
    throw;
  } catch (const Error& e) {
    throw InvalidInput(where + ": " + e.what());
  }
  sc.canonical = nlohmann::json::parse(text).dump();
  return sc;
}

Scenario load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read scenario file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

}  // namespace tdlc::scenario

namespace tdlc::scenario {

namespace detail {
const std::vector<std::pair<std::string, std::string>>& catalog_data();
}

const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, body] : detail::catalog_data()) out.push_back(id);
    return out;
  }();
  return ids;
}

const std::string& catalog_source(const std::string& id) {
  for (const auto& [name, body] : detail::catalog_data())
    if (name == id) return body;
  throw InvalidInput("no catalog scenario '" + id + "'");
}

Scenario catalog_scenario(const std::string& id) { return parse(catalog_source(id)); }

}  // namespace tdlc::scenario
