#include "json_io.hpp"

namespace afs {

std::string rat_str(const Rat& c) { return c.str(); }

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (!j.is_string()) throw contract_error("coefficient must be a string or integer");
  std::string s = j.get<std::string>();
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw contract_error("coefficient has zero denominator");
    return Rat(num, den);
  } catch (const contract_error&) {
    throw;
  } catch (const std::exception&) {
    throw contract_error("malformed coefficient: " + s);
  }
}

json pvec_to_json(const PVec& v) {
  json a = json::array();
  for (long long x : v.v) a.push_back(x);
  return a;
}

PVec pvec_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw contract_error("weight vector must be a nonempty array");
  std::vector<long long> v;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw contract_error("weight entries must be integers");
    v.push_back(e.get<long long>());
  }
  return PVec(int(v.size()), v);
}

json pmat_to_json(const PMat& A) {
  json o;
  o["n"] = A.n;
  o["diag"] = pvec_to_json(A.diag);
  json off = json::array();
  for (const auto& e : A.off) off.push_back(json::array({e.i, e.j, e.a}));
  o["off"] = off;
  return o;
}

PMat pmat_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n"))
    throw contract_error("matrix must be an object with fields n, diag, off");
  int n = j.at("n").get<int>();
  if (n < 1) throw contract_error("matrix rank must be >= 1");
  PMat A(n);
  if (j.contains("diag")) {
    PVec d = pvec_from_json(j.at("diag"));
    if (d.n != n) throw contract_error("diag length must equal n");
    A.diag = d;
  }
  if (j.contains("off"))
    for (const auto& e : j.at("off")) {
      if (!e.is_array() || e.size() != 3)
        throw contract_error("off entries must be [i, j, value] triples");
      A.add(e[0].get<long long>(), e[1].get<long long>(), e[2].get<long long>());
    }
  return A;
}

json matlc_to_json(const MatLC& x) {
  json terms = json::array();
  for (const auto& [M, c] : x)
    terms.push_back(json{{"coeff", rat_str(c)}, {"index", pmat_to_json(M)}});
  return json{{"terms", terms}};
}

MatLC matlc_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms"))
    throw contract_error("element must be an object with a terms array");
  MatLC x;
  for (const auto& t : j.at("terms"))
    add_term(x, pmat_from_json(t.at("index")), rat_from_json(t.at("coeff")),
             Ring::Q());
  return x;
}

json hkey_to_json(const HKey& k) {
  return json{{"offdiag", pmat_to_json(k.A)}, {"weight", pvec_to_json(k.lam)}};
}

HKey hkey_from_json(const json& j) {
  if (!j.is_object() || !j.contains("offdiag") || !j.contains("weight"))
    throw contract_error("index must carry offdiag and weight fields");
  PMat A = pmat_from_json(j.at("offdiag"));
  if (!A.zero_diag())
    throw contract_error("offdiag part must have a zero diagonal");
  PVec lam = pvec_from_json(j.at("weight"));
  if (lam.n != A.n) throw contract_error("weight length must equal n");
  return HKey{A, lam};
}

json hyplc_to_json(const HypLC& x) {
  json terms = json::array();
  for (const auto& [k, c] : x)
    terms.push_back(json{{"coeff", rat_str(c)}, {"index", hkey_to_json(k)}});
  return json{{"terms", terms}};
}

HypLC hyplc_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms"))
    throw contract_error("element must be an object with a terms array");
  HypLC x;
  for (const auto& t : j.at("terms"))
    add_term(x, hkey_from_json(t.at("index")), rat_from_json(t.at("coeff")),
             Ring::Q());
  return x;
}

json kbar_to_json(const KBarLC& x, const ModPContext& ctx) {
  json terms = json::array();
  for (const auto& [k, c] : x) {
    json idx;
    idx["offdiag"] = pmat_to_json(k.A);
    idx["diag_mod"] = json{{"p", ctx.p}, {"h", ctx.h},
                           {"residues", pvec_to_json(k.lam)}};
    terms.push_back(json{{"coeff", rat_str(c)}, {"index", idx}});
  }
  return json{{"terms", terms}};
}

KBarLC kbar_from_json(const json& j, const ModPContext& ctx) {
  if (!j.is_object() || !j.contains("terms"))
    throw contract_error("element must be an object with a terms array");
  Ring fp = Ring::Fp(ctx.p);
  KBarLC x;
  for (const auto& t : j.at("terms")) {
    const json& idx = t.at("index");
    if (!idx.contains("offdiag") || !idx.contains("diag_mod"))
      throw contract_error("index must carry offdiag and diag_mod fields");
    const json& dm = idx.at("diag_mod");
    if (dm.at("p").get<long long>() != ctx.p || dm.at("h").get<int>() != ctx.h)
      throw contract_error("diag_mod modulus disagrees with the context flags");
    PMat A = pmat_from_json(idx.at("offdiag"));
    PVec res = pvec_from_json(dm.at("residues"));
    if (res.n != A.n) throw contract_error("residues length must equal n");
    add_scaled(x, kbar_elem(A, res, ctx), rat_from_json(t.at("coeff")), fp);
  }
  return x;
}

json gpoly_to_json(const GPoly& f) {
  json terms = json::array();
  for (const auto& [m, c] : f) {
    json mono = json::array();
    for (long long v : m) mono.push_back(v);
    terms.push_back(json{{"coeff", rat_str(c)}, {"monomial", mono}});
  }
  return json{{"terms", terms}};
}

GPoly gpoly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms"))
    throw contract_error("polynomial must be an object with a terms array");
  GPoly f;
  for (const auto& t : j.at("terms")) {
    GMono m;
    for (const auto& e : t.at("monomial")) {
      long long v = e.get<long long>();
      if (v < 1) throw contract_error("monomial entries must be >= 1");
      m.push_back(v);
    }
    std::sort(m.begin(), m.end());
    add_term(f, m, rat_from_json(t.at("coeff")), Ring::Q());
  }
  return f;
}

Ring ring_from_code(const std::string& s) {
  if (s == "Z") return Ring::Z();
  if (s == "Q") return Ring::Q();
  if (s.rfind("Fp:", 0) == 0) {
    try {
      return Ring::Fp(std::stoll(s.substr(3)));
    } catch (const contract_error&) {
      throw;
    } catch (const std::exception&) {
      throw contract_error("malformed ring code: " + s);
    }
  }
  throw contract_error("unknown ring code: " + s + " (use Z, Q, or Fp:<p>)");
}

}  // namespace afs
