#include "symmom/io.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "symmom/errors.hpp"

namespace symmom {

std::string format_double(double v) {
  char buf[40];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    if (back == v) break;
  }
  return buf;
}

std::complex<double> parse_complex(const std::string& text) {
  if (text.empty()) throw domain_error("parse_complex: empty string");
  double re = 0.0, im = 0.0;
  std::size_t pos = 0;
  auto read_number = [&](bool* pure_i) -> double {
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.')) ++pos;
    *pure_i = (pos == digits);  // bare "i" or signed "i"
    if (*pure_i) return text[start] == '-' ? -1.0 : 1.0;
    return std::stod(text.substr(start, pos - start));
  };
  bool saw_im = false;
  while (pos < text.size()) {
    bool pure_i = false;
    double v = read_number(&pure_i);
    if (pos < text.size() && (text[pos] == 'i' || text[pos] == 'I')) {
      ++pos;
      if (saw_im) throw domain_error("parse_complex: repeated imaginary part in '" + text + "'");
      im = v;
      saw_im = true;
    } else {
      if (pure_i) throw domain_error("parse_complex: cannot parse '" + text + "'");
      re = v;
    }
  }
  if (pos != text.size()) throw domain_error("parse_complex: trailing characters in '" + text + "'");
  return {re, im};
}

std::string harmonics_to_json(const HarmonicsF& h) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [mp, coef] : h.coeffs) {
    out[std::to_string(mp)] = {coef.real(), coef.imag()};
  }
  return out.dump();
}

std::string harmonics_to_csv(const HarmonicsF& h) {
  std::ostringstream ss;
  ss << "m_prime,re,im\n";
  for (const auto& [mp, coef] : h.coeffs) {
    ss << mp << ',' << format_double(coef.real()) << ',' << format_double(coef.imag()) << '\n';
  }
  return ss.str();
}

std::string moment_to_csv(std::int64_t N, int m, std::complex<double> z, const std::string& kind,
                          const MomentConstant& mc) {
  std::ostringstream ss;
  ss << "N,m,z_re,z_im,kind,value_re,value_im,tail_bound,P,nodes\n";
  ss << N << ',' << m << ',' << format_double(z.real()) << ',' << format_double(z.imag()) << ',' << kind << ','
     << format_double(mc.value.real()) << ',' << format_double(mc.value.imag()) << ','
     << format_double(mc.tail_bound) << ',' << mc.policy.prime_cutoff << ',' << mc.policy.quadrature_nodes
     << '\n';
  return ss.str();
}

std::string moment_to_json(std::int64_t N, int m, std::complex<double> z, const std::string& kind,
                           const MomentConstant& mc) {
  nlohmann::ordered_json out;
  out["N"] = N;
  out["m"] = m;
  out["z"] = {z.real(), z.imag()};
  out["kind"] = kind;
  out["value"] = {mc.value.real(), mc.value.imag()};
  out["tail_bound"] = mc.tail_bound;
  out["prime_cutoff"] = mc.policy.prime_cutoff;
  out["nodes"] = mc.policy.quadrature_nodes;
  return out.dump();
}

std::string report_to_csv(const EnsembleReport& rep, const std::string& kind) {
  const bool half = kind == "half";
  const std::complex<double> emp = half ? rep.empirical_half : rep.empirical_one;
  const MomentConstant& pred = half ? rep.predicted_half : rep.predicted_one;
  const double residual = half ? rep.residual_half : rep.residual_one;
  std::ostringstream ss;
  ss << "level,forms,sum_weights,mean_central,m,z_re,z_im,empirical,predicted,tail,residual\n";
  ss << rep.level << ',' << rep.forms << ',' << format_double(rep.sum_weights) << ','
     << format_double(rep.mean_central) << ',' << rep.m << ',' << format_double(rep.z.real()) << ','
     << format_double(rep.z.imag()) << ',' << format_double(emp.real()) << ','
     << format_double(pred.value.real()) << ',' << format_double(pred.tail_bound) << ','
     << format_double(residual) << '\n';
  return ss.str();
}

std::string report_to_json(const EnsembleReport& rep) {
  nlohmann::ordered_json out;
  out["level"] = rep.level;
  out["forms"] = rep.forms;
  out["m"] = rep.m;
  out["z"] = {rep.z.real(), rep.z.imag()};
  out["x"] = rep.x;
  out["sum_weights"] = rep.sum_weights;
  out["mean_central"] = rep.mean_central;
  out["empirical_half"] = {rep.empirical_half.real(), rep.empirical_half.imag()};
  out["predicted_half"] = {rep.predicted_half.value.real(), rep.predicted_half.value.imag()};
  out["tail_half"] = rep.predicted_half.tail_bound;
  out["residual_half"] = rep.residual_half;
  out["empirical_one"] = {rep.empirical_one.real(), rep.empirical_one.imag()};
  out["predicted_one"] = {rep.predicted_one.value.real(), rep.predicted_one.value.imag()};
  out["tail_one"] = rep.predicted_one.tail_bound;
  out["residual_one"] = rep.residual_one;
  out["corollary_ratio"] = rep.corollary_ratio;
  return out.dump();
}

}  // namespace symmom
