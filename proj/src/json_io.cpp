#include "lts/json_io.hpp"

#include <fstream>
#include <sstream>

#include "lts/error.hpp"

namespace lts {

Field parse_field(std::string_view s) {
  if (s == "Q") return Field::Q;
  if (s == "Qi" || s == "Q(i)") return Field::Qi;
  throw Error(Errc::Parse, "field must be Q or Qi, got '" + std::string(s) + "'");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::Parse, path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error(Errc::Parse, "field '" + where + "': " + what);
}

const Json& member(const Json& j, const std::string& where, const char* key) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where.empty() ? key : where + "." + key, "missing");
  return *it;
}

std::string join(const std::string& where, const std::string& key) { return where.empty() ? key : where + "." + key; }

std::string text_of(const Json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  bad(where, "expected a scalar string");
}

Scalar scalar_at(const Json& j, const std::string& where, Field field) {
  Scalar s;
  try {
    s = Scalar::parse(text_of(j, where));
  } catch (const Error& e) {
    bad(where, e.what());
  }
  if (field == Field::Q && !s.is_real())
    throw Error(Errc::FieldRestriction, "field '" + where + "': value " + s.to_string() + " needs i");
  return s;
}

RationalFunction rf_at(const Json& j, const std::string& where, Field field) {
  RationalFunction f;
  try {
    f = RationalFunction::parse(text_of(j, where));
  } catch (const Error& e) {
    bad(where, e.what());
  }
  if (field == Field::Q) {
    for (const auto* p : {&f.num(), &f.den()})
      for (const auto& c : p->coeffs())
        if (!c.is_real())
          throw Error(Errc::FieldRestriction, "field '" + where + "': " + f.to_string() + " needs i");
  }
  return f;
}

std::size_t size_at(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(where, "expected a non-negative integer");
  return static_cast<std::size_t>(j.get<long long>());
}

int index_at(const Json& j, const std::string& where, std::size_t n) {
  if (!j.is_number_integer()) bad(where, "expected an integer index");
  long long v = j.get<long long>();
  if (v < 1 || static_cast<std::size_t>(v) > n) bad(where, "index " + std::to_string(v) + " outside 1.." + std::to_string(n));
  return static_cast<int>(v);
}

template <std::size_t K>
std::array<int, K> indices_at(const Json& j, const std::string& where, std::size_t n) {
  if (!j.is_array() || j.size() != K) bad(where, "expected " + std::to_string(K) + " indices");
  std::array<int, K> out{};
  for (std::size_t a = 0; a < K; ++a) out[a] = index_at(j[a], where + "[" + std::to_string(a) + "]", n);
  return out;
}

Field declared_field(const Json& j, const std::string& where, Field requested) {
  auto it = j.find("field");
  if (it == j.end()) return requested;
  if (!it->is_string()) bad(join(where, "field"), "expected \"Q\" or \"Q(i)\"");
  Field f;
  try {
    f = parse_field(it->get<std::string>());
  } catch (const Error& e) {
    bad(join(where, "field"), e.what());
  }
  return f == Field::Q ? Field::Q : requested;
}

SystemRef system_ref_at(const Json& j, const std::string& where, Field field, bool allowIndexFn) {
  SystemRef s;
  const Json& name = member(j, where, "name");
  if (!name.is_string()) bad(join(where, "name"), "expected a string");
  s.name = name.get<std::string>();
  if (auto it = j.find("lambda"); it != j.end()) s.lambda = scalar_at(*it, join(where, "lambda"), field);
  if (auto it = j.find("index_fn"); it != j.end()) {
    if (!allowIndexFn) bad(join(where, "index_fn"), "not allowed here");
    s.indexFn = rf_at(*it, join(where, "index_fn"), field);
  }
  if (s.lambda && s.indexFn) bad(where, "give either lambda or index_fn");
  try {
    const CatalogEntry& e = catalog_entry(s.name);
    if (!e.family && (s.lambda || s.indexFn)) bad(where, s.name + " takes no parameter");
  } catch (const Error& e) {
    if (e.kind() != Errc::UnknownName) throw;
    bad(join(where, "name"), e.what());
  }
  return s;
}

Json system_ref_json(const SystemRef& s) {
  Json j = Json::object();
  j["name"] = s.name;
  if (s.lambda) j["lambda"] = s.lambda->to_string();
  if (s.indexFn) j["index_fn"] = s.indexFn->to_string();
  return j;
}

Lts lts_at(const Json& j, const std::string& where, Field field, bool checkAxioms = true) {
  if (!j.is_object()) bad(where.empty() ? "(root)" : where, "expected an object");
  if (j.contains("name") && !j.contains("dim")) {
    SystemRef s = system_ref_at(j, where, field, false);
    if (catalog_entry(s.name).family && !s.lambda) bad(join(where, "lambda"), "missing for " + s.name);
    Lts T = instantiate(s.name, s.lambda);
    if (field == Field::Q && T.uses_imaginary())
      throw Error(Errc::FieldRestriction, "field '" + where + "': system needs i");
    return T;
  }
  const std::size_t n = size_at(member(j, where, "dim"), join(where, "dim"));
  Field f = declared_field(j, where, field);
  const Json& prods = member(j, where, "products");
  const std::string pw = join(where, "products");
  if (!prods.is_array()) bad(pw, "expected an array");
  std::vector<Generator> gens;
  for (std::size_t g = 0; g < prods.size(); ++g) {
    const std::string gw = pw + "[" + std::to_string(g) + "]";
    Generator gen{indices_at<3>(member(prods[g], gw, "args"), gw + ".args", n), Vec<Scalar>(n)};
    const Json& val = member(prods[g], gw, "value");
    if (!val.is_object()) bad(gw + ".value", "expected an object of target index to coefficient");
    for (const auto& [key, coeff] : val.items()) {
      const std::string vw = gw + ".value." + key;
      std::size_t p = 0;
      try {
        std::size_t used = 0;
        long long v = std::stoll(key, &used);
        if (used != key.size() || v < 1 || static_cast<std::size_t>(v) > n) throw std::invalid_argument(key);
        p = static_cast<std::size_t>(v);
      } catch (const std::exception&) {
        bad(vw, "key must be a target index in 1.." + std::to_string(n));
      }
      gen.value[p - 1] = scalar_at(coeff, vw, f);
    }
    gens.push_back(std::move(gen));
  }
  return checkAxioms ? complete_table(n, gens) : complete_table_unchecked(n, gens);
}

}  // namespace

Json lts_to_json(const Lts& T) {
  const std::size_t n = T.dim();
  Json prods = Json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Json val = Json::object();
        for (std::size_t p = 0; p < n; ++p)
          if (!T.c(i, j, k, p).is_zero()) val[std::to_string(p + 1)] = T.c(i, j, k, p).to_string();
        if (val.empty()) continue;
        prods.push_back({{"args", {i + 1, j + 1, k + 1}}, {"value", val}});
      }
  return {{"dim", n}, {"field", T.uses_imaginary() ? "Q(i)" : "Q"}, {"products", prods}};
}

Lts lts_from_json(const Json& j, Field field, bool checkAxioms) { return lts_at(j, "", field, checkAxioms); }

Json cocycle_to_json(const Lts& system, const Cocycle& theta) {
  Json coeffs = Json::array();
  const std::size_t n = theta.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& v = theta.coords()[Cocycle::coord(n, i, j, k)];
        if (!v.is_zero()) coeffs.push_back({{"ijk", {i + 1, j + 1, k + 1}}, {"value", v.to_string()}});
      }
  return {{"system", lts_to_json(system)}, {"coeffs", coeffs}};
}

namespace {

CocycleDoc cocycle_at(const Json& j, const std::string& where, Field field, const Lts* base) {
  if (!j.is_object()) bad(where.empty() ? "(root)" : where, "expected an object");
  CocycleDoc doc;
  if (auto it = j.find("system"); it != j.end()) {
    doc.system = lts_at(*it, join(where, "system"), field);
    if (base && !(doc.system == *base)) bad(join(where, "system"), "differs from the extension base");
  } else if (base) {
    doc.system = *base;
  } else {
    member(j, where, "system");
  }
  const std::size_t n = doc.system.dim();
  doc.theta = Cocycle(n);
  const Json& coeffs = member(j, where, "coeffs");
  const std::string cw = join(where, "coeffs");
  if (!coeffs.is_array()) bad(cw, "expected an array");
  for (std::size_t c = 0; c < coeffs.size(); ++c) {
    const std::string ew = cw + "[" + std::to_string(c) + "]";
    auto ijk = indices_at<3>(member(coeffs[c], ew, "ijk"), ew + ".ijk", n);
    if (ijk[0] >= ijk[1]) bad(ew + ".ijk", "requires i < j");
    doc.theta.set(std::size_t(ijk[0] - 1), std::size_t(ijk[1] - 1), std::size_t(ijk[2] - 1),
                  scalar_at(member(coeffs[c], ew, "value"), ew + ".value", field));
  }
  return doc;
}

}  // namespace

CocycleDoc cocycle_from_json(const Json& j, Field field, const Lts* base) { return cocycle_at(j, "", field, base); }

Json extension_to_json(const ExtensionSpec& spec) {
  Json thetas = Json::array();
  for (const auto& t : spec.thetas) thetas.push_back(cocycle_to_json(spec.base, t));
  return {{"base", lts_to_json(spec.base)}, {"thetas", thetas}};
}

ExtensionSpec extension_from_json(const Json& j, Field field) {
  ExtensionSpec spec;
  spec.base = lts_at(member(j, "", "base"), "base", field);
  const Json& thetas = member(j, "", "thetas");
  if (!thetas.is_array()) bad("thetas", "expected an array");
  for (std::size_t t = 0; t < thetas.size(); ++t)
    spec.thetas.push_back(cocycle_at(thetas[t], "thetas[" + std::to_string(t) + "]", field, &spec.base).theta);
  return spec;
}

Json witness_to_json(const DegenerationWitness& w) {
  return {{"source", system_ref_json(w.source)}, {"target", system_ref_json(w.target)},
          {"basis", basis_strings(w.basis)}};
}

DegenerationWitness witness_from_json(const Json& j, Field field) {
  DegenerationWitness w;
  w.source = system_ref_at(member(j, "", "source"), "source", field, true);
  w.target = system_ref_at(member(j, "", "target"), "target", field, false);
  if (catalog_entry(w.target.name).family && !w.target.lambda) bad("target.lambda", "missing for " + w.target.name);
  if (catalog_entry(w.source.name).family && !w.source.lambda && !w.source.indexFn)
    bad("source", "family source needs lambda or index_fn");
  const Json& basis = member(j, "", "basis");
  const std::size_t n = catalog_entry(w.target.name).dim;
  if (catalog_entry(w.source.name).dim != n) bad("target", "source and target dimensions differ");
  if (!basis.is_array() || basis.size() != n) bad("basis", "expected " + std::to_string(n) + " rows");
  w.basis = ParametrizedBasis(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::string rw = "basis[" + std::to_string(r) + "]";
    if (!basis[r].is_array() || basis[r].size() != n) bad(rw, "expected " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) w.basis(r, c) = rf_at(basis[r][c], rw + "[" + std::to_string(c) + "]", field);
  }
  return w;
}

Json separating_to_json(const SeparatingSet& R) {
  Json eq = Json::array();
  for (const auto& rel : R.equal) eq.push_back({rel.lhs, rel.rhs, rel.factor.to_string()});
  Json j = {{"dim", R.dim}, {"equal", eq}, {"zero_otherwise", R.zeroOtherwise}};
  if (!R.name.empty()) j["name"] = R.name;
  return j;
}

SeparatingSet separating_from_json(const Json& j, Field field) {
  SeparatingSet R;
  R.dim = size_at(member(j, "", "dim"), "dim");
  if (auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) bad("name", "expected a string");
    R.name = it->get<std::string>();
  }
  const Json& zo = member(j, "", "zero_otherwise");
  if (!zo.is_boolean()) bad("zero_otherwise", "expected true or false");
  R.zeroOtherwise = zo.get<bool>();
  const Json& eq = member(j, "", "equal");
  if (!eq.is_array()) bad("equal", "expected an array");
  for (std::size_t r = 0; r < eq.size(); ++r) {
    const std::string ew = "equal[" + std::to_string(r) + "]";
    if (!eq[r].is_array() || eq[r].size() != 3) bad(ew, "expected [[i,j,k,p],[i',j',k',p'],factor]");
    R.equal.push_back({indices_at<4>(eq[r][0], ew + "[0]", R.dim), indices_at<4>(eq[r][1], ew + "[1]", R.dim),
                       scalar_at(eq[r][2], ew + "[2]", field)});
  }
  return R;
}

}  // namespace lts
