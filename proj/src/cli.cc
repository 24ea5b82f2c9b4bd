// Copyright 2026 The QSS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qss/cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qss/access.h"
#include "qss/code_file.h"
#include "qss/css.h"
#include "qss/error.h"
#include "qss/qsim.h"

namespace qss {
namespace {

using nlohmann::json;

constexpr std::uint64_t kOracleDefaultMaxDim = 1ull << 20;

struct CommonFlags {
  std::string path;
  std::string g;
  bool allow_impure = false;
  bool force = false;
  bool json_output = false;
  double eps = kDefaultEps;
  std::uint64_t max_dim = kDefaultMaxAmplitudes;
  std::uint64_t t_cap = 1ull << 16;
  std::optional<std::uint64_t> secret;
  std::string set;
};

struct Loaded {
  LinearCode code;
  std::string digest;
};

Loaded Load(const CommonFlags& flags) {
  std::ifstream in(flags.path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + flags.path);
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  return {ParseCodeText(text), Fnv1aHex(text)};
}

std::vector<std::uint64_t> SplitIntegers(const std::string& s, const std::string& what) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit)) {
      throw Error(ErrorCode::kParseError, "bad " + what + " '" + s + "'");
    }
    out.push_back(std::stoull(tok));
  }
  return out;
}

Vector ParseVectorFlag(const std::string& s, const Field& field) {
  std::vector<std::uint64_t> raw;
  if (s.find(',') == std::string::npos && field.q() <= 10) {
    for (char c : s) {
      if (c < '0' || c > '9') throw Error(ErrorCode::kParseError, "bad vector '" + s + "'");
      raw.push_back(static_cast<std::uint64_t>(c - '0'));
    }
  } else {
    raw = SplitIntegers(s, "vector");
  }
  Vector v;
  for (auto x : raw) {
    if (x >= field.q()) {
      throw Error(ErrorCode::kParseError, "vector entry " + std::to_string(x) +
                                              " outside [0, " + std::to_string(field.q()) + ")");
    }
    v.push_back(static_cast<Symbol>(x));
  }
  return v;
}

PartySet ParseSetFlag(const std::string& s, std::size_t n) {
  std::vector<int> positions;
  if (!s.empty()) {
    for (auto x : SplitIntegers(s, "party set")) {
      positions.push_back(static_cast<int>(std::min<std::uint64_t>(x, INT32_MAX)));
    }
  }
  return PartySet::FromPositions(std::move(positions), n);
}

std::uint64_t EnumerationCap(const CommonFlags& flags) {
  return flags.force ? std::numeric_limits<std::uint64_t>::max() : kDefaultEnumerationCap;
}

std::uint64_t DimensionCap(const CommonFlags& flags) {
  return flags.force ? std::numeric_limits<std::uint64_t>::max() : flags.max_dim;
}

QssScheme BuildScheme(const LinearCode& code, const CommonFlags& flags) {
  SchemeOptions options;
  options.allow_impure = flags.allow_impure;
  options.enumeration_cap = EnumerationCap(flags);
  if (!flags.g.empty()) options.g = ParseVectorFlag(flags.g, code.field());
  return QssScheme::Build(code, options);
}

std::string BasisLabel(const Vector& x, std::uint32_t q) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (q > 10 && i > 0) out += ",";
    out += std::to_string(x[i]);
  }
  return out;
}

json Complex(Amplitude a) { return json::array({a.real(), a.imag()}); }

json SchemeJson(const std::string& command, const Loaded& loaded, const QssScheme& s) {
  json j;
  j["command"] = command;
  j["input_digest"] = loaded.digest;
  j["n"] = s.n();
  j["k"] = s.k();
  j["q"] = s.q();
  j["d"] = s.d();
  j["pure"] = s.pure();
  j["g"] = s.g().values;
  j["beta"] = s.beta();
  return j;
}

json WitnessJson(const OracleWitness& w) {
  return {{"a", w.op.a},  {"b", w.op.b},          {"i", w.i},
          {"j", w.j},     {"value", Complex(w.lhs)}, {"reference", Complex(w.rhs)}};
}

json SetsJson(const std::vector<PartySet>& sets) {
  json arr = json::array();
  for (const auto& s : sets) arr.push_back(s.positions());
  return arr;
}

std::string SetsText(const std::vector<PartySet>& sets) {
  std::string out;
  for (const auto& s : sets) out += "  " + s.ToString() + "\n";
  return out;
}

OracleOptions MakeOracleOptions(const CommonFlags& flags) {
  OracleOptions o;
  o.eps = flags.eps;
  o.max_amplitudes = flags.max_dim;
  o.max_operators = flags.t_cap;
  o.force = flags.force;
  return o;
}

void Emit(std::ostream& out, const CommonFlags& flags, const json& j,
          const std::string& text) {
  if (flags.json_output) {
    out << j.dump(2) << "\n";
  } else {
    out << text;
  }
}

std::string HeaderText(const QssScheme& s) {
  std::ostringstream os;
  os << "[[" << s.n() << ",1," << s.d() << "]]_" << s.q() << " scheme from a ["
     << s.n() << "," << s.k() << "] code; pure=" << (s.pure() ? "yes" : "no")
     << " g=" << BasisLabel(s.g().values, s.q()) << " beta=" << s.beta() << "\n";
  return os.str();
}

int CmdValidate(const CommonFlags& flags, std::ostream& out) {
  const Loaded loaded = Load(flags);
  const QssScheme s = BuildScheme(loaded.code, flags);
  const Lemma2Report lemma = CheckLemma2(s);
  json j = SchemeJson("validate", loaded, s);
  j["lemma2"] = {{"passed", lemma.passed},
                 {"pairs_checked", lemma.pairs_checked},
                 {"d_odd", lemma.d_odd}};
  if (lemma.witness) {
    j["lemma2"]["witness"] = {{"x", lemma.witness->x},
                              {"y", lemma.witness->y},
                              {"dot", lemma.witness->dot}};
  }
  std::ostringstream text;
  text << HeaderText(s) << "pairwise dot products over C \\ C-dual: "
       << (lemma.passed ? "ok" : "FAILED") << " (" << lemma.pairs_checked
       << " pairs)\n";
  Emit(out, flags, j, text.str());
  return lemma.passed ? kExitOk : kExitValidation;
}

int CmdStabilizer(const CommonFlags& flags, std::ostream& out) {
  const Loaded loaded = Load(flags);
  const QssScheme s = BuildScheme(loaded.code, flags);
  const Matrix stab = StabilizerMatrix(s);
  json j = SchemeJson("stabilizer", loaded, s);
  j["stabilizer"] = stab;
  std::ostringstream text;
  text << HeaderText(s);
  for (const auto& row : stab) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      text << (i == s.n() ? " | " : (i ? " " : "")) << row[i];
    }
    text << "\n";
  }
  Emit(out, flags, j, text.str());
  return kExitOk;
}

int CmdMinimal(const CommonFlags& flags, std::ostream& out) {
  const Loaded loaded = Load(flags);
  const QssScheme s = BuildScheme(loaded.code, flags);
  const auto minimal = MinimalCodewordsOutsideDual(s.code(), EnumerationCap(flags));
  json j = SchemeJson("minimal", loaded, s);
  j["minimal_codewords"] = json::array();
  std::ostringstream text;
  text << HeaderText(s) << minimal.size() << " minimal codewords outside the dual\n";
  for (const auto& mc : minimal) {
    j["minimal_codewords"].push_back({{"word", mc.word.values},
                                      {"support", mc.word.Support()},
                                      {"multiplicity", mc.multiplicity}});
    text << "  " << BasisLabel(mc.word.values, s.q()) << "  weight "
         << mc.word.Weight() << "\n";
  }
  Emit(out, flags, j, text.str());
  return kExitOk;
}

int CmdGamma(const CommonFlags& flags, std::ostream& out) {
  const Loaded loaded = Load(flags);
  const QssScheme s = BuildScheme(loaded.code, flags);
  const AccessStructure gamma = GammaFromTheorem(s, EnumerationCap(flags));
  json j = SchemeJson("gamma", loaded, s);
  j["gamma_min"] = SetsJson(gamma.gamma_min);
  json mult = json::object();
  for (std::size_t i = 0; i < gamma.gamma_min.size(); ++i) {
    std::string key;
    for (int p : gamma.gamma_min[i].positions()) {
      key += (key.empty() ? "" : ",") + std::to_string(p);
    }
    mult[key] = gamma.multiplicity[i];
  }
  j["multiplicity"] = mult;
  std::ostringstream text;
  text << HeaderText(s) << gamma.gamma_min.size() << " minimal authorized sets:\n"
       << SetsText(gamma.gamma_min);
  Emit(out, flags, j, text.str());
  return kExitOk;
}

Symbol SecretFlag(const CommonFlags& flags, const Field& field) {
  if (!flags.secret) throw Error(ErrorCode::kParseError, "--secret is required");
  if (*flags.secret >= field.q()) {
    throw Error(ErrorCode::kParseError, "secret outside [0, " + std::to_string(field.q()) + ")");
  }
  return static_cast<Symbol>(*flags.secret);
}

int CmdEncode(const CommonFlags& flags, std::ostream& out) {
  const Loaded loaded = Load(flags);
  const QssScheme s = BuildScheme(loaded.code, flags);
  const Symbol secret = SecretFlag(flags, s.field());
  const StateVector sv = EncodeSecret(s, secret, DimensionCap(flags));
  json j = SchemeJson("encode", loaded, s);
  j["secret"] = secret;
  j["norm"] = sv.Norm();
  j["amplitudes"] = json::array();
  std::ostringstream text;
  text << HeaderText(s) << "secret " << secret << " encodes to:\n";
  const auto amps = sv.amplitudes();
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    if (std::abs(amps[idx]) < flags.eps) continue;
    const std::string label = BasisLabel(sv.DigitsOf(idx), s.q());
    j["amplitudes"].push_back({{"basis", label}, {"amplitude", Complex(amps[idx])}});
    text << "  " << amps[idx].real() << (amps[idx].imag() < 0 ? "" : "+")
         << amps[idx].imag() << "j |" << label << ">\n";
  }
  Emit(out, flags, j, text.str());
  return kExitOk;
}

int CmdRecover(const CommonFlags& flags, std::ostream& out) {
  const Loaded loaded = Load(flags);
  const QssScheme s = BuildScheme(loaded.code, flags);
  const Symbol secret = SecretFlag(flags, s.field());
  const PartySet set = ParseSetFlag(flags.set, s.n());

  // Witness: the first minimal codeword (by weight, then support) whose
  // support lies inside the requested set.
  std::optional<Codeword> witness;
  for (const auto& mc : MinimalCodewordsOutsideDual(s.code(), EnumerationCap(flags))) {
    if (PartySet::FromPositions(mc.word.Support(), s.n()).IsSubsetOf(set)) {
      witness = mc.word;
      break;
    }
  }
  json j = SchemeJson("recover", loaded, s);
  j["secret"] = secret;
  j["set"] = set.positions();
  if (!witness) {
    j["authorized"] = false;
    Emit(out, flags, j, HeaderText(s) + set.ToString() + " is not authorized\n");
    return kExitValidation;
  }

  const StateVector encoded = EncodeSecret(s, secret, DimensionCap(flags));
  const Recovery rec = Recover(s, encoded, *witness, flags.eps, DimensionCap(flags));
  const double fidelity = Fidelity(encoded, rec.post_state);

  // Classical combination of the shares, on every basis state of the code
  // state; the parity of the set when q = 2.
  bool classical_agrees = true;
  const auto amps = encoded.amplitudes();
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    if (std::abs(amps[idx]) < flags.eps) continue;
    if (CombineShares(s, encoded.DigitsOf(idx), *witness) != rec.secret) {
      classical_agrees = false;
    }
  }

  const bool ok = rec.secret == secret && fidelity >= 1.0 - flags.eps && classical_agrees;
  j["authorized"] = true;
  j["witness"] = witness->values;
  j["witness_support"] = witness->Support();
  j["alpha"] = rec.alpha;
  j["ancilla"] = rec.ancilla;
  j["ancilla_mass"] = rec.ancilla_mass;
  j["recovered"] = rec.secret;
  j["fidelity"] = fidelity;
  j["classical_agrees"] = classical_agrees;
  std::ostringstream text;
  text << HeaderText(s) << "witness " << BasisLabel(witness->values, s.q())
       << " (support " << PartySet::FromPositions(witness->Support(), s.n()).ToString()
       << ")\nancilla " << rec.ancilla << " with mass " << rec.ancilla_mass
       << ", alpha " << rec.alpha << "\nrecovered " << rec.secret << " (secret "
       << secret << "), fidelity " << fidelity << "\n";
  Emit(out, flags, j, text.str());
  return ok ? kExitOk : kExitValidation;
}

int CmdOracle(const CommonFlags& flags, std::ostream& out) {
  const Loaded loaded = Load(flags);
  const QssScheme s = BuildScheme(loaded.code, flags);
  const OracleOptions options = MakeOracleOptions(flags);
  json j = SchemeJson("oracle", loaded, s);
  std::ostringstream text;
  text << HeaderText(s);
  if (!flags.set.empty()) {
    const PartySet t = ParseSetFlag(flags.set, s.n());
    const GottesmanOracle oracle(s, options);
    const OracleVerdict auth = oracle.IsAuthorized(t);
    const OracleVerdict unauth = oracle.IsUnauthorized(t);
    j["set"] = t.positions();
    j["authorized"] = auth.holds;
    j["unauthorized"] = unauth.holds;
    if (auth.witness) j["authorized_witness"] = WitnessJson(*auth.witness);
    if (unauth.witness) j["unauthorized_witness"] = WitnessJson(*unauth.witness);
    text << t.ToString() << ": "
         << (auth.holds ? "authorized" : (unauth.holds ? "unauthorized" : "neither"))
         << (auth.holds && unauth.holds ? " and unauthorized" : "") << "\n";
    Emit(out, flags, j, text.str());
    return auth.holds != unauth.holds ? kExitOk : kExitValidation;
  }
  const OracleReport report = FullOracleStructure(s, options);
  j["gamma_min"] = SetsJson(report.structure.gamma_min);
  j["subsets_scanned"] = report.subsets_scanned;
  j["dichotomy_violations"] = SetsJson(report.dichotomy_violations);
  j["complementary_authorized"] = SetsJson(report.complementary_authorized);
  j["monotonicity_violations"] = json::array();
  for (const auto& [a, b] : report.monotonicity_violations) {
    j["monotonicity_violations"].push_back({a.positions(), b.positions()});
  }
  j["ok"] = report.ok();
  text << report.subsets_scanned << " subsets scanned; "
       << report.structure.gamma_min.size() << " minimal authorized sets:\n"
       << SetsText(report.structure.gamma_min)
       << "dichotomy violations: " << report.dichotomy_violations.size()
       << ", monotonicity violations: " << report.monotonicity_violations.size()
       << "\n";
  Emit(out, flags, j, text.str());
  return report.ok() ? kExitOk : kExitValidation;
}

int CmdCompare(const CommonFlags& flags, std::ostream& out) {
  const Loaded loaded = Load(flags);
  const QssScheme s = BuildScheme(loaded.code, flags);
  const AccessStructure theorem = GammaFromTheorem(s, EnumerationCap(flags));
  const OracleReport report = FullOracleStructure(s, MakeOracleOptions(flags));
  const StructureDiff diff = CompareStructures(theorem, report.structure);
  json j = SchemeJson("compare", loaded, s);
  j["theorem"] = SetsJson(theorem.gamma_min);
  j["oracle"] = SetsJson(report.structure.gamma_min);
  j["only_in_theorem"] = SetsJson(diff.only_in_first);
  j["only_in_oracle"] = SetsJson(diff.only_in_second);
  j["agree"] = diff.empty();
  j["oracle_ok"] = report.ok();
  std::ostringstream text;
  text << HeaderText(s) << "theorem: " << theorem.gamma_min.size()
       << " sets, oracle: " << report.structure.gamma_min.size() << " sets\n";
  if (diff.empty()) {
    text << "structures agree\n";
  } else {
    text << "only from minimal codewords:\n" << SetsText(diff.only_in_first)
         << "only from the oracle:\n" << SetsText(diff.only_in_second);
  }
  Emit(out, flags, j, text.str());
  return diff.empty() && report.ok() ? kExitOk : kExitValidation;
}

int ExitFor(const Error& e) {
  switch (e.category()) {
    case ErrorCategory::kValidation: return kExitValidation;
    case ErrorCategory::kResource: return kExitResource;
    case ErrorCategory::kInput: return kExitInput;
  }
  return kExitValidation;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Classical secret sharing with CSS quantum codes"};
  app.require_subcommand(1);
  CommonFlags flags;
  std::function<int(const CommonFlags&, std::ostream&)> action;

  auto add = [&](const std::string& name, const std::string& help,
                 int (*fn)(const CommonFlags&, std::ostream&), bool oracle) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("code", flags.path, "code file")->required();
    sub->add_option("--g", flags.g, "secret direction g in C \\ C-dual");
    sub->add_flag("--allow-impure", flags.allow_impure, "accept impure codes");
    sub->add_flag("--force", flags.force, "override resource caps");
    sub->add_flag("--json", flags.json_output, "machine-readable output");
    sub->add_option("--eps", flags.eps, "numerical tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--max-dim", flags.max_dim, "statevector amplitude cap");
    sub->add_option("--t-cap", flags.t_cap, "operator scan cap per subset");
    sub->add_option("--secret", flags.secret, "secret value in F_q");
    sub->add_option("--set", flags.set, "comma-separated 1-indexed parties");
    sub->callback([&, sub, fn, oracle] {
      if (oracle && sub->count("--max-dim") == 0) flags.max_dim = kOracleDefaultMaxDim;
      action = fn;
    });
  };
  add("validate", "check the CSS pair and pairwise dot products", CmdValidate, false);
  add("stabilizer", "print the stabilizer matrix [H 0; 0 H]", CmdStabilizer, false);
  add("minimal", "list minimal codewords outside the dual", CmdMinimal, false);
  add("gamma", "minimal access structure from minimal codewords", CmdGamma, false);
  add("encode", "encode a secret into the qudit shares", CmdEncode, false);
  add("recover", "recover a secret from an authorized set", CmdRecover, false);
  add("oracle", "brute-force access structure from expectation values", CmdOracle, true);
  add("compare", "compare the codeword and oracle access structures", CmdCompare, true);

  std::vector<std::string> argv_storage{"qss"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qss: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    return action(flags, out);
  } catch (const Error& e) {
    err << "qss: " << e.what() << "\n";
    return ExitFor(e);
  }
}

}  // namespace qss
