#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "traincat/characters.hpp"
#include "traincat/encoders.hpp"
#include "traincat/surfaces.hpp"
#include "traincat/tensor_oracle.hpp"
#include "traincat/verify.hpp"

using namespace traincat;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kInvalid = 2, kBound = 3, kIo = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\n\r") - b + 1);
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(trim(tok), &used));
      if (used != trim(tok).size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer list: " + text);
    }
  }
  return out;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stod(trim(tok)));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad number list: " + text);
    }
  }
  return out;
}

/// "r:(1 2); y:(); b:()" -> one permutation per part. A leading word followed by ':'
/// names the part and is ignored; "c2:" stays, it is a color prefix.
GroupElement parse_tuple(const std::string& text, int colors) {
  static const std::regex named(R"(^\s*([A-Za-z][A-Za-z0-9_]*)\s*:(.*)$)");
  static const std::regex color_prefix(R"(^c[0-9]+$)");
  GroupElement out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    std::smatch m;
    if (std::regex_match(part, m, named) && !std::regex_match(m[1].str(), color_prefix)) part = m[2].str();
    out.push_back(parse_cycles(trim(part), colors));
  }
  if (out.empty()) throw std::invalid_argument("empty permutation tuple");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Inline JSON or a path to a JSON file.
std::string json_arg(const std::string& arg) {
  const std::string t = trim(arg);
  if (!t.empty() && (t[0] == '{' || t[0] == '[')) return t;
  return read_file(t);
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed: " + path);
}

std::string format_real(double x) {
  if (std::abs(x) < 5e-13) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s = buf;
  if (s.find_first_of(".en") == std::string::npos) s += ".0";
  return s;
}

std::string format_value(std::complex<double> z) {
  if (std::abs(z.imag()) < 5e-13) return format_real(z.real());
  return format_real(z.real()) + (z.imag() < 0 ? " - " : " + ") + format_real(std::abs(z.imag())) + "i";
}

struct PairArg {
  std::string text = "tri";
  bool young() const { return text.rfind("young:", 0) == 0; }
  int young_colors() const { return parse_ints(text.substr(6)).at(0); }
  PairSpec spec() const { return young() ? PairSpec::young(young_colors()) : parse_encoding(text).spec(); }
};

struct CosetJob {
  PairArg pair;
  std::string levels = "0,0";
  std::string g, h, left, right, input, out;
  int n = 3;
};

std::vector<int> levels_of(const CosetJob& job, std::size_t count) {
  std::vector<int> l = parse_ints(job.levels);
  if (l.size() != count)
    throw std::invalid_argument("expected " + std::to_string(count) + " levels, got '" + job.levels + "'");
  for (int x : l)
    if (x < 0) throw std::invalid_argument("levels must be non-negative");
  return l;
}

CosetDatum datum_from_job(const Encoding& enc, const CosetJob& job) {
  if (!job.input.empty()) return enc.from_json(json_arg(job.input));
  if (job.g.empty()) throw std::invalid_argument("need --g or --input");
  auto l = levels_of(job, 2);
  return enc.encode(parse_tuple(job.g, enc.spec().colors), l[0], l[1]);
}

int cmd_coset(const std::string& action, const CosetJob& job) {
  if (job.pair.young()) {
    const PairSpec spec = job.pair.spec();
    if (action == "count") {
      auto l = levels_of(job, 2);
      std::cout << FiniteDoubleCosets(spec, job.n, l[0], l[1]).orbit_count() << '\n';
      return kOk;
    }
    if (action == "canon") {
      auto l = levels_of(job, 2);
      if (l[0] != 0 || l[1] != 0) throw std::invalid_argument("young cosets are encoded at level 0 only");
      SMatrix s = coset_invariant_young(parse_tuple(job.g, spec.colors).at(0), 0);
      nlohmann::json rows = nlohmann::json::array();
      for (int i = 1; i <= s.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 1; j <= s.size(); ++j) row.push_back(s(i, j));
        rows.push_back(row);
      }
      std::cout << "young " << rows.dump() << '\n';
      return kOk;
    }
    throw std::invalid_argument("young pairs support count and canon only");
  }
  const Encoding enc = parse_encoding(job.pair.text);
  if (action == "count") {
    auto l = levels_of(job, 2);
    std::cout << FiniteDoubleCosets(enc.spec(), job.n, l[0], l[1]).orbit_count() << '\n';
    return kOk;
  }
  if (action == "build") {
    write_output(enc.to_json(datum_from_job(enc, job)), job.out);
    return kOk;
  }
  if (action == "canon") {
    write_output(enc.canon(datum_from_job(enc, job)), job.out);
    return kOk;
  }
  if (action == "mul") {
    CosetDatum a, b;
    if (!job.left.empty() || !job.right.empty()) {
      if (job.left.empty() || job.right.empty()) throw std::invalid_argument("mul needs both --left and --right");
      a = enc.from_json(json_arg(job.left));
      b = enc.from_json(json_arg(job.right));
    } else {
      if (job.g.empty() || job.h.empty()) throw std::invalid_argument("mul needs --g and --h, or --left and --right");
      auto l = levels_of(job, 3);
      a = enc.encode(parse_tuple(job.g, enc.spec().colors), l[0], l[1]);
      b = enc.encode(parse_tuple(job.h, enc.spec().colors), l[1], l[2]);
    }
    write_output(enc.to_json(enc.mul(a, b)), job.out);
    return kOk;
  }
  throw std::invalid_argument("unknown coset action: " + action);
}

std::complex<double> json_complex(const nlohmann::json& e) {
  if (e.is_array()) return {e.at(0).get<double>(), e.at(1).get<double>()};
  return {e.get<double>(), 0.0};
}

std::vector<Eigen::VectorXcd> parse_vectors(const std::string& text) {
  std::vector<Eigen::VectorXcd> out;
  try {
    for (const auto& row : nlohmann::json::parse(text)) {
      Eigen::VectorXcd v(static_cast<Eigen::Index>(row.size()));
      for (std::size_t i = 0; i < row.size(); ++i) v[static_cast<Eigen::Index>(i)] = json_complex(row[i]);
      out.push_back(v);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("vector JSON: ") + e.what());
  }
  return out;
}

CoeffTensor parse_coeffs(const std::string& text) {
  CoeffTensor t;
  try {
    auto j = nlohmann::json::parse(text);
    t.dims = j.at("dims").get<std::vector<int>>();
    for (const auto& e : j.at("coeffs")) t.coeffs.push_back(json_complex(e));
    if (j.contains("parities")) t.parities = j.at("parities").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("coefficient JSON: ") + e.what());
  }
  t.validate(1e-9);
  return t;
}

struct CharJob {
  std::string alpha, beta, g, gram, s, xi, coeffs, pair = "tri";
  int colors = 1;
};

int cmd_char(const std::string& action, const CharJob& job) {
  if (action == "thoma") {
    ThomaParams params(job.alpha.empty() ? std::vector<double>{} : parse_doubles(job.alpha),
                       job.beta.empty() ? std::vector<double>{} : parse_doubles(job.beta));
    std::cout << format_real(thoma_char(params, parse_cycles(job.g))) << '\n';
    return kOk;
  }
  if (action == "nessonov") {
    std::cout << format_value(nessonov_char(GramSpec::parse(job.gram), SMatrix::parse(job.s))) << '\n';
    return kOk;
  }
  if (action == "young") {
    auto xis = parse_vectors(json_arg(job.xi));
    std::cout << format_value(young_spherical(xis, parse_cycles(job.g, static_cast<int>(xis.size())))) << '\n';
    return kOk;
  }
  if (action == "assign") {
    const Encoding enc = parse_encoding(job.pair);
    if (enc.kind() != EncoderKind::Surfaces) throw std::invalid_argument("assignment sums need a polygon pair");
    GroupElement g = parse_tuple(job.g, 1);
    const int n = std::max(1, max_support(g));
    EquippedSurface s = surface_from_tuple(g, 0, 0, n);
    std::cout << format_value(spherical_assignment_sum(s, parse_coeffs(json_arg(job.coeffs)))) << '\n';
    return kOk;
  }
  throw std::invalid_argument("unknown char action: " + action);
}

int cmd_verify(const std::string& suite, const SuiteOptions& opts) {
  bool ok = true;
  for (const auto& r : run_suite(suite, opts)) {
    std::cout << (r.ok() ? "ok   " : "FAIL ") << r.summary() << '\n';
    ok = ok && r.ok();
  }
  return ok ? kOk : kVerifyFailed;
}

int cmd_export(const std::string& format, const CosetJob& job) {
  const Encoding enc = parse_encoding(job.pair.text);
  CosetDatum d = datum_from_job(enc, job);
  if (format == "json") write_output(enc.to_json(d), job.out);
  else if (format == "dot") write_output(enc.to_dot(d), job.out);
  else throw std::invalid_argument("unknown export format: " + format);
  return kOk;
}

void add_coset_options(CLI::App* cmd, CosetJob& job) {
  cmd->add_option("--pair", job.pair.text, "bi, tri, ngon:K, gem:N, bigraph:L (wreath:L), young:M")
      ->capture_default_str();
  cmd->add_option("--levels", job.levels, "comma-separated levels: alpha,beta (mul: alpha,beta,gamma)")
      ->capture_default_str();
  cmd->add_option("--g", job.g, "permutation tuple, parts separated by ';'");
  cmd->add_option("--input", job.input, "coset JSON (inline or file)");
  cmd->add_option("--out", job.out, "output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double cosets of infinite symmetric groups and their combinatorial models"};
  app.set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  app.require_subcommand(1);

  CosetJob coset_job;
  std::string coset_action;
  auto* coset = app.add_subcommand("coset", "build, multiply, canonicalize or count double cosets");
  coset->add_option("action", coset_action, "build|mul|canon|count")
      ->required()
      ->check(CLI::IsMember({"build", "mul", "canon", "count"}));
  add_coset_options(coset, coset_job);
  coset->add_option("--h", coset_job.h, "second tuple for mul");
  coset->add_option("--left", coset_job.left, "left factor JSON for mul");
  coset->add_option("--right", coset_job.right, "right factor JSON for mul");
  coset->add_option("--n", coset_job.n, "finite group size for count")->capture_default_str();

  CharJob char_job;
  std::string char_action;
  auto* chr = app.add_subcommand("char", "evaluate characters and spherical functions");
  chr->add_option("action", char_action, "thoma|nessonov|young|assign")
      ->required()
      ->check(CLI::IsMember({"thoma", "nessonov", "young", "assign"}));
  chr->add_option("--alpha", char_job.alpha, "Thoma alphas, comma-separated");
  chr->add_option("--beta", char_job.beta, "Thoma betas, comma-separated");
  chr->add_option("--g", char_job.g, "permutation (assign: tuple)");
  chr->add_option("--A", char_job.gram, "Gram matrix: ones(m) or JSON rows");
  chr->add_option("--S", char_job.s, "s-matrix JSON rows, '.' on the diagonal");
  chr->add_option("--xi", char_job.xi, "JSON list of unit vectors, one per color");
  chr->add_option("--coeffs", char_job.coeffs, "JSON {dims, coeffs} for assignment sums");
  chr->add_option("--pair", char_job.pair, "polygon pair for assign")->capture_default_str();

  SuiteOptions suite_opts;
  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run property suites");
  verify->add_option("suite", suite, "stabilization|gluing|characters|topology|all")
      ->capture_default_str()
      ->check(CLI::IsMember({"stabilization", "gluing", "characters", "topology", "all"}));
  verify->add_option("--seed", suite_opts.seed, "random seed")->capture_default_str();
  verify->add_option("--cases", suite_opts.cases, "cases per level combination")->capture_default_str();

  CosetJob export_job;
  std::string export_format;
  auto* exp = app.add_subcommand("export", "write a coset as JSON or DOT");
  exp->add_option("format", export_format, "json|dot")->required()->check(CLI::IsMember({"json", "dot"}));
  add_coset_options(exp, export_job);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*coset) return cmd_coset(coset_action, coset_job);
    if (*chr) return cmd_char(char_action, char_job);
    if (*verify) return cmd_verify(suite, suite_opts);
    if (*exp) return cmd_export(export_format, export_job);
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << '\n';
    return kBound;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}
