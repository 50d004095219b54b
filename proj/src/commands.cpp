#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "garland.hpp"
#include "json_io.hpp"
#include "kstab.hpp"
#include "verify.hpp"

namespace afs {

namespace {

// ---------------------------------------------------------------- plumbing

long long req_int(const json& req, const char* key) {
  auto it = req.find(key);
  if (it == req.end() || !it->is_number_integer())
    throw contract_error(std::string("missing or non-integer field: ") + key);
  return it->get<long long>();
}

long long req_int_or(const json& req, const char* key, long long dflt) {
  auto it = req.find(key);
  if (it == req.end()) return dflt;
  if (!it->is_number_integer())
    throw contract_error(std::string("non-integer field: ") + key);
  return it->get<long long>();
}

std::string req_str(const json& req, const char* key) {
  auto it = req.find(key);
  if (it == req.end() || !it->is_string())
    throw contract_error(std::string("missing or non-string field: ") + key);
  return it->get<std::string>();
}

std::string req_str_or(const json& req, const char* key,
                       const std::string& dflt) {
  auto it = req.find(key);
  if (it == req.end()) return dflt;
  if (!it->is_string())
    throw contract_error(std::string("non-string field: ") + key);
  return it->get<std::string>();
}

long long default_window() {
  if (const char* s = std::getenv("AFSCHUR_WINDOW")) {
    char* end = nullptr;
    long long w = std::strtoll(s, &end, 10);
    if (end && *end == '\0' && w >= 1) return w;
    throw contract_error("AFSCHUR_WINDOW must be a positive integer");
  }
  return 2;
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("AFSCHUR_SUITE_SEED"))
    return std::strtoull(s, nullptr, 10);
  return SuiteOptions{}.seed;
}

// Element inputs are inline JSON objects, inline JSON text, or file paths.
json element_input(const json& req, const char* key) {
  auto it = req.find(key);
  if (it == req.end())
    throw contract_error(std::string("missing input field: ") + key);
  if (it->is_object() || it->is_array()) return *it;
  if (!it->is_string())
    throw contract_error(std::string("input field must be an object, JSON "
                                     "text, or file path: ") +
                         key);
  std::string s = it->get<std::string>();
  size_t at = s.find_first_not_of(" \t\r\n");
  if (at != std::string::npos && (s[at] == '{' || s[at] == '['))
    return json::parse(s);
  std::ifstream in(s);
  if (!in) throw contract_error("cannot open input file: " + s);
  std::ostringstream buf;
  buf << in.rdbuf();
  return json::parse(buf.str());
}

ModPContext ctx_of(const json& req) {
  return ModPContext(req_int(req, "p"), (int)req_int(req, "h"));
}

ModBasis modbasis_of(const std::string& s) {
  if (s == "Bh") return ModBasis::Bh;
  if (s == "Mh") return ModBasis::Mh;
  if (s == "Ch") return ModBasis::Ch;
  if (s == "Gh") return ModBasis::Gh;
  if (s == "Mh0") return ModBasis::Mh0;
  throw contract_error("unknown level basis kind: " + s +
                       " (expected Bh|Mh|Ch|Gh|Mh0)");
}

LittleBasis littlebasis_of(const std::string& s) {
  if (s == "Phr") return LittleBasis::Phr;
  if (s == "Mhr") return LittleBasis::Mhr;
  if (s == "Bhr") return LittleBasis::Bhr;
  if (s == "PPhr") return LittleBasis::PPhr;
  if (s == "MPhr") return LittleBasis::MPhr;
  throw contract_error("unknown degree basis kind: " + s +
                       " (expected Phr|Mhr|Bhr|PPhr|MPhr)");
}

// ------------------------------------------------------------ text renders

std::string matlc_text(const MatLC& x) {
  if (x.empty()) return "0\n";
  std::string out;
  for (const auto& [A, c] : x) {
    if (!(c == 1)) out += rat_str(c) + "·";
    out += A.str();
    out += '\n';
  }
  return out;
}

std::string hyplc_text(const HypLC& x) {
  if (x.empty()) return "0\n";
  std::string out;
  for (const auto& [k, c] : x) {
    if (!(c == 1)) out += rat_str(c) + "·";
    out += hkey_str(k);
    out += '\n';
  }
  return out;
}

std::string kbar_text(const KBarLC& x, const ModPContext& ctx) {
  if (x.empty()) return "0\n";
  std::string out;
  for (const auto& [k, c] : x) {
    PMat A = k.A;
    A.diag = k.lam;
    if (!(c == 1)) out += rat_str(c) + "·";
    out += A.str() + " mod " + std::to_string(ctx.q);
    out += '\n';
  }
  return out;
}

// ------------------------------------------------------------- dispatchers

struct Response {
  json result;       // machine document, nested under "result"
  std::string text;  // human rendering for format=text
  int code = 0;
};

Response cmd_schur_mul(const json& req, bool oracle) {
  int n = (int)req_int(req, "n");
  long long r = req_int(req, "r");
  Ring ring = ring_from_code(req_str_or(req, "ring", "Z"));
  MatLC x = matlc_from_json(element_input(req, "left"));
  MatLC y = matlc_from_json(element_input(req, "right"));
  for (const auto& lc : {x, y})
    for (const auto& [A, c] : lc)
      if (!in_theta(A, n, r))
        throw contract_error("index outside the degree-" + std::to_string(r) +
                             " coordinate set: " + A.str());
  MatLC out;
  if (oracle) {
    out = mul_by_oracle(x, y, ring);
  } else {
    Engine eng(GenMode::NonNegative, ring);
    out = eng.mul(x, y);
  }
  return Response{matlc_to_json(out), matlc_text(out), 0};
}

Response cmd_hyper_mul(const json& req) {
  int n = (int)req_int(req, "n");
  Ring ring = ring_from_code(req_str_or(req, "ring", "Z"));
  HypLC x = hyplc_from_json(element_input(req, "left"));
  HypLC y = hyplc_from_json(element_input(req, "right"));
  for (const auto& lc : {x, y})
    for (const auto& [k, c] : lc)
      if (k.A.n != n)
        throw contract_error("element rank differs from --n");
  HyperEngine eng(ring);
  HypLC out = eng.mul(x, y);
  return Response{hyplc_to_json(out), hyplc_text(out), 0};
}

Response cmd_hyper_convert(const json& req) {
  Ring ring = ring_from_code(req_str_or(req, "ring", "Z"));
  HBasis from = hbasis_from_code(req_str(req, "from"));
  HBasis to = hbasis_from_code(req_str(req, "to"));
  HypLC x = hyplc_from_json(element_input(req, "input"));
  HyperEngine eng(ring);
  HypLC out = eng.convert(x, from, to);
  return Response{hyplc_to_json(out), hyplc_text(out), 0};
}

Response cmd_hall_mul(const json& req) {
  Ring ring = ring_from_code(req_str_or(req, "ring", "Z"));
  PMat A = pmat_from_json(element_input(req, "left"));
  PMat B = pmat_from_json(element_input(req, "right"));
  HyperEngine eng(ring);
  HypLC out = eng.hall_mul(A, B);
  return Response{hyplc_to_json(out), hyplc_text(out), 0};
}

Response cmd_garland_lambda(const json& req) {
  GPoly f = lambda_poly(req_int(req, "k"));
  return Response{gpoly_to_json(f), gpoly_str(f) + "\n", 0};
}

Response cmd_garland_verify(const json& req) {
  int n = (int)req_int(req, "n");
  long long k = req_int(req, "k");
  long long i = req_int(req, "i");
  long long l = req_int(req, "l");
  HyperEngine eng(Ring::Q());
  HypLC lhs = psi(n, i, l, lambda_poly(k), eng);
  HypLC rhs = partition_rhs(n, k, i, l);
  bool equal = lhs == rhs && all_integral(lhs);
  json res;
  res["equal"] = equal;
  res["evaluated"] = hyplc_to_json(lhs);
  res["partition_sum"] = hyplc_to_json(rhs);
  std::string text = std::string(equal ? "equal" : "DIFFER") + "\n" +
                     hyplc_text(lhs);
  return Response{res, text, equal ? 0 : 1};
}

Response cmd_modp_basis(const json& req) {
  int n = (int)req_int(req, "n");
  ModPContext ctx = ctx_of(req);
  long long W = req_int_or(req, "window", default_window());
  ModBasis kind = modbasis_of(req_str(req, "kind"));
  HyperEngine eng(Ring::Fp(ctx.p));
  auto fam = enumerate_basis(kind, n, ctx, W, eng);
  json arr = json::array();
  std::string text;
  for (const auto& [k, e] : fam) {
    json row;
    row["key"] = hkey_to_json(k);
    row["element"] = hyplc_to_json(e);
    arr.push_back(row);
    text += hkey_str(k) + ":\n" + hyplc_text(e);
  }
  json res;
  res["count"] = fam.size();
  res["family"] = arr;
  return Response{res, text, 0};
}

Response cmd_modp_member(const json& req) {
  int n = (int)req_int(req, "n");
  ModPContext ctx = ctx_of(req);
  HypLC x = hyplc_from_json(element_input(req, "input"));
  for (const auto& [k, c] : x)
    if (k.A.n != n) throw contract_error("element rank differs from --n");
  bool member = membership_h(reduce(x, ctx.p), ctx);
  json res;
  res["member"] = member;
  return Response{res, std::string(member ? "member" : "not a member") + "\n",
                  0};
}

Response cmd_little_basis(const json& req) {
  int n = (int)req_int(req, "n");
  long long r = req_int(req, "r");
  ModPContext ctx = ctx_of(req);
  long long W = req_int_or(req, "window", default_window());
  LittleBasis kind = littlebasis_of(req_str(req, "kind"));
  auto fam = little_inf_basis(kind, n, r, ctx, W);
  json arr = json::array();
  std::string text;
  for (const auto& [k, e] : fam) {
    json row;
    row["key"] = hkey_to_json(k);
    row["element"] = matlc_to_json(e);
    arr.push_back(row);
    text += hkey_str(k) + ":\n" + matlc_text(e);
  }
  json res;
  res["count"] = fam.size();
  res["family"] = arr;
  return Response{res, text, 0};
}

Response cmd_k_mul(const json& req) {
  int n = (int)req_int(req, "n");
  Ring ring = ring_from_code(req_str_or(req, "ring", "Z"));
  MatLC x = matlc_from_json(element_input(req, "left"));
  MatLC y = matlc_from_json(element_input(req, "right"));
  for (const auto& lc : {x, y})
    for (const auto& [A, c] : lc)
      if (A.n != n) throw contract_error("element rank differs from --n");
  Engine eng(GenMode::AnyDiagonal, ring);
  MatLC out = k_mul(x, y, eng);
  return Response{matlc_to_json(out), matlc_text(out), 0};
}

Response cmd_kbar_mul(const json& req) {
  ModPContext ctx = ctx_of(req);
  KBarLC x = kbar_from_json(element_input(req, "left"), ctx);
  KBarLC y = kbar_from_json(element_input(req, "right"), ctx);
  KBarLC out = kbar_mul(x, y, ctx);
  return Response{kbar_to_json(out, ctx), kbar_text(out, ctx), 0};
}

Response cmd_phi(const json& req) {
  ModPContext ctx = ctx_of(req);
  HypLC x = hyplc_from_json(element_input(req, "input"));
  KBarLC out = phi_h(reduce(x, ctx.p), ctx);
  return Response{kbar_to_json(out, ctx), kbar_text(out, ctx), 0};
}

Response cmd_independence(const json& req) {
  int n = (int)req_int(req, "n");
  ModPContext ctx = ctx_of(req);
  json idx = element_input(req, "indices");
  if (!idx.is_array()) throw contract_error("indices must be a JSON array");
  std::vector<HKey> fam;
  for (const auto& j : idx) fam.push_back(hkey_from_json(j));
  bool ok = independence_check(fam, n, ctx);
  json res;
  res["independent"] = ok;
  return Response{res,
                  std::string(ok ? "independent" : "DEPENDENT") + "\n",
                  ok ? 0 : 1};
}

Response cmd_verify(const json& req) {
  std::string suite = req_str_or(req, "suite", "all");
  if (suite == "list") {
    json res;
    res["suites"] = suite_names();
    std::string text;
    for (const auto& s : suite_names()) text += s + "\n";
    return Response{res, text, 0};
  }
  SuiteOptions opt;
  opt.seed = default_seed();
  if (auto it = req.find("seed"); it != req.end())
    opt.seed = it->get<std::uint64_t>();
  opt.n = (int)req_int_or(req, "n", 0);
  opt.r = req_int_or(req, "r", 0);

  std::vector<SuiteResult> results;
  if (suite == "all")
    results = run_all_suites(opt);
  else
    results.push_back(run_suite(suite, opt));

  bool pass = true;
  json arr = json::array();
  std::string text;
  for (const auto& r : results) {
    pass = pass && r.pass;
    json row;
    row["name"] = r.name;
    row["property"] = r.property;
    row["pass"] = r.pass;
    row["checks"] = r.checks;
    row["seconds"] = r.seconds;
    if (!r.pass) row["detail"] = r.detail;
    arr.push_back(row);
    char line[512];
    std::snprintf(line, sizeof line, "[%s] %-22s %lld checks in %.1fs  %s\n",
                  r.pass ? "PASS" : "FAIL", r.name.c_str(), r.checks,
                  r.seconds, r.pass ? r.property.c_str() : r.detail.c_str());
    text += line;
  }
  json res;
  res["pass"] = pass;
  res["suites"] = arr;
  return Response{res, text, pass ? 0 : 1};
}

Response dispatch(const json& req) {
  std::string cmd = req_str(req, "command");
  if (cmd == "schur-mul") return cmd_schur_mul(req, false);
  if (cmd == "schur-oracle") return cmd_schur_mul(req, true);
  if (cmd == "hyper-mul") return cmd_hyper_mul(req);
  if (cmd == "hyper-convert") return cmd_hyper_convert(req);
  if (cmd == "hall-mul") return cmd_hall_mul(req);
  if (cmd == "garland-lambda") return cmd_garland_lambda(req);
  if (cmd == "garland-verify") return cmd_garland_verify(req);
  if (cmd == "modp-basis") return cmd_modp_basis(req);
  if (cmd == "modp-member") return cmd_modp_member(req);
  if (cmd == "little-basis") return cmd_little_basis(req);
  if (cmd == "k-mul") return cmd_k_mul(req);
  if (cmd == "kbar-mul") return cmd_kbar_mul(req);
  if (cmd == "phi") return cmd_phi(req);
  if (cmd == "verify") return cmd_verify(req);
  if (cmd == "independence") return cmd_independence(req);
  throw contract_error("unknown command: " + cmd);
}

// Canonical machine output: sorted object keys at every level, term arrays
// preserved in their canonical order, two-space indent.
std::string canonical_dump(const json& doc) {
  nlohmann::json sorted = nlohmann::json::parse(doc.dump());
  return sorted.dump(2) + "\n";
}

std::string error_body(const char* kind, const std::string& message,
                       bool as_text) {
  if (as_text) return std::string(kind) + " error: " + message + "\n";
  json doc;
  json err;
  err["kind"] = kind;
  err["message"] = message;
  doc["error"] = err;
  return canonical_dump(doc);
}

}  // namespace

CommandOutcome run_command(const std::string& request_text) {
  bool as_text = false;
  try {
    json req = json::parse(request_text);
    if (!req.is_object())
      throw contract_error("request must be a JSON object");
    as_text = req_str_or(req, "format", "json") == "text";
    Response r = dispatch(req);
    if (as_text) return CommandOutcome{r.code, r.text};
    json doc;
    doc["command"] = req_str(req, "command");
    doc["result"] = r.result;
    return CommandOutcome{r.code, canonical_dump(doc)};
  } catch (const json::parse_error& e) {
    return CommandOutcome{2, error_body("contract", e.what(), as_text)};
  } catch (const contract_error& e) {
    return CommandOutcome{2, error_body("contract", e.what(), as_text)};
  } catch (const internal_error& e) {
    return CommandOutcome{1, error_body("internal", e.what(), as_text)};
  } catch (const std::exception& e) {
    return CommandOutcome{1, error_body("internal", e.what(), as_text)};
  }
}

}  // namespace afs
