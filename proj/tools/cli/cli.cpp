#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "splitcircle/errors.hpp"
#include "splitcircle/factor.hpp"
#include "splitcircle/graeffe.hpp"
#include "splitcircle/precision.hpp"

namespace splitcircle::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string shortest(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

Json complex_json(const BigComplex& z) { return Json{{"re", z.re().to_string()}, {"im", z.im().to_string()}}; }

std::string residual_text(const BigFloat& r) { return r.is_zero() ? "0" : r.to_string(6); }

unsigned widest(const std::vector<Poly>& ps) {
  unsigned bits = working_precision();
  for (const Poly& p : ps) bits = std::max(bits, p.precision());
  return bits;
}

BigFloat parse_positive(const std::string& text, const char* name, unsigned bits) {
  BigFloat v;
  try {
    v = BigFloat::parse(text, bits);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string("--") + name + " is not a decimal number: '" + text + "'");
  }
  if (!(v > BigFloat(0L))) throw UsageError(std::string("--") + name + " must be positive");
  return v;
}

std::string read_input(const JobConfig& config, std::istream& in) {
  std::ostringstream buf;
  if (config.input_path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(config.input_path);
  if (!file) throw UsageError("cannot open input '" + config.input_path + "'");
  buf << file.rdbuf();
  return buf.str();
}

void emit_factors(const JobConfig& config, const Poly& p, const FactorList& fl, std::ostream& out) {
  const unsigned bits = widest(fl.factors);
  if (config.format == Format::json) {
    Json factors = Json::array();
    for (const Poly& f : fl.factors) {
      Json coeffs = Json::array();
      for (const BigComplex& c : f.coeffs()) coeffs.push_back(complex_json(c));
      factors.push_back(std::move(coeffs));
    }
    Json doc{{"degree", p.degree()},     {"eps", config.eps},           {"factors", std::move(factors)},
             {"residual", residual_text(fl.residual)}, {"precision_bits", bits}};
    out << doc.dump(2) << '\n';
    return;
  }
  out << "# degree " << p.degree() << "\n# eps " << config.eps << "\n# residual " << residual_text(fl.residual)
      << "\n# precision_bits " << bits << "\n# columns: c0_re c0_im c1_re c1_im\n";
  for (const Poly& f : fl.factors) {
    out << f[0].re().to_string() << ' ' << f[0].im().to_string() << ' ' << f[1].re().to_string() << ' '
        << f[1].im().to_string() << '\n';
  }
}

void emit_roots(const JobConfig& config, const Poly& p, const FactorList& fl, std::ostream& out) {
  const unsigned bits = widest(fl.factors);
  std::vector<BigComplex> rs;
  {
    PrecisionScope s(bits);
    for (const Poly& f : fl.factors) rs.push_back(-(f[0] / f[1]));
  }
  if (config.format == Format::json) {
    Json roots = Json::array();
    for (const BigComplex& z : rs) roots.push_back(complex_json(z));
    Json doc{{"degree", p.degree()}, {"eps", config.eps}, {"roots", std::move(roots)},
             {"residual", residual_text(fl.residual)}, {"precision_bits", bits}};
    out << doc.dump(2) << '\n';
    return;
  }
  out << "# degree " << p.degree() << "\n# eps " << config.eps << "\n# residual " << residual_text(fl.residual)
      << "\n# precision_bits " << bits << '\n';
  for (const BigComplex& z : rs) out << z.re().to_string() << ' ' << z.im().to_string() << '\n';
}

void emit_count(const JobConfig& config, int count, std::ostream& out) {
  if (config.format == Format::json) {
    Json doc{{"count", count}, {"radius", config.disk_radius}, {"tau", shortest(config.tau)}};
    out << doc.dump(2) << '\n';
    return;
  }
  out << count << '\n';
}

void emit_modulus(const JobConfig& config, const ModulusEstimate& m, std::ostream& out) {
  if (config.format == Format::json) {
    Json doc{{"value", m.value.to_string()}, {"tau", shortest(m.tau)}};
    if (config.command == Command::mod) doc["k"] = config.k_index;
    out << doc.dump(2) << '\n';
    return;
  }
  out << m.value.to_string() << '\n';
}

void execute(const JobConfig& config, const Poly& p, std::ostream& out) {
  const unsigned bits = config.precision_bits;
  switch (config.command) {
    case Command::factor:
    case Command::roots: {
      BigFloat eps = parse_positive(config.eps, "eps", bits);
      if (!(eps < BigFloat(1L))) throw UsageError("--eps must be below 1");
      FactorList fl = fact(p, eps);
      if (config.command == Command::factor) {
        emit_factors(config, p, fl, out);
      } else {
        emit_roots(config, p, fl, out);
      }
      return;
    }
    case Command::count:
      emit_count(config, nrd(p, parse_positive(config.disk_radius, "radius", bits), config.tau), out);
      return;
    case Command::modmax:
      emit_modulus(config, mod_max(p, config.tau), out);
      return;
    case Command::modmin:
      emit_modulus(config, mod_min(p, config.tau), out);
      return;
    case Command::mod:
      if (config.k_index < 1 || config.k_index > p.degree()) {
        throw UsageError("--k must lie in [1, " + std::to_string(p.degree()) + "]");
      }
      emit_modulus(config, mod_k(p, config.k_index, config.tau), out);
      return;
  }
}

}  // namespace

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

Poly parse_poly(std::string_view text, unsigned bits) {
  std::vector<BigComplex> coeffs;
  int line_no = 0;
  int last_line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream fields{std::string(line)};
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(std::move(t));
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected 're im', found " + std::to_string(tokens.size()) + " field(s)");
    }
    try {
      coeffs.emplace_back(BigFloat::parse(tokens[0], bits), BigFloat::parse(tokens[1], bits));
    } catch (const std::invalid_argument&) {
      throw ParseError(line_no, "not a decimal number pair: '" + tokens[0] + " " + tokens[1] + "'");
    }
    last_line = line_no;
  }
  if (coeffs.empty()) throw ParseError(0, "no coefficients");
  if (coeffs.back().is_zero()) throw ParseError(last_line, "leading coefficient is zero");
  return Poly(std::move(coeffs));
}

int run(const JobConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    if (config.precision_bits < kMinPrecisionBits) {
      throw UsageError("--bits must be at least " + std::to_string(kMinPrecisionBits));
    }
    PrecisionScope scope(config.precision_bits);
    Poly p = parse_poly(read_input(config, in), config.precision_bits);
    if (p.degree() < 1) throw ParseError(0, "polynomial has degree 0");
    std::ostringstream result;
    execute(config, p, result);
    if (config.output_path.empty()) {
      out << result.str();
    } else {
      std::ofstream file(config.output_path, std::ios::binary);
      if (!(file << result.str())) throw UsageError("cannot write output '" + config.output_path + "'");
    }
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << config.input_path << ": " << e.what() << '\n';
    return 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace splitcircle::cli
