#include "stable_info/law.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "stable_info/errors.hpp"

namespace stable_info {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be positive and finite");
}

std::shared_ptr<RandomLaw::Node> leaf(RandomLaw::Kind k, double p0 = 0.0, double p1 = 0.0) {
  auto n = std::make_shared<RandomLaw::Node>();
  n->kind = k;
  n->p0 = p0;
  n->p1 = p1;
  return n;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

RandomLaw RandomLaw::gaussian(double sigma) {
  require_positive(sigma, "gaussian sigma");
  return RandomLaw(leaf(Kind::Gaussian, sigma));
}

RandomLaw RandomLaw::uniform(double a) {
  require_positive(a, "uniform half-width");
  return RandomLaw(leaf(Kind::Uniform, a));
}

RandomLaw RandomLaw::laplace(double b) {
  require_positive(b, "laplace scale");
  return RandomLaw(leaf(Kind::Laplace, b));
}

RandomLaw RandomLaw::cauchy(double gamma) {
  require_positive(gamma, "cauchy scale");
  return RandomLaw(leaf(Kind::Cauchy, gamma));
}

RandomLaw RandomLaw::sas(double alpha, double gamma) {
  if (!(alpha > 0.0 && alpha <= 2.0)) throw DomainError("sas alpha must lie in (0, 2]");
  require_positive(gamma, "sas gamma");
  return RandomLaw(leaf(Kind::SaS, alpha, gamma));
}

RandomLaw RandomLaw::shifted(const RandomLaw& law, double delta) {
  if (!std::isfinite(delta)) throw DomainError("shift must be finite");
  auto n = leaf(Kind::Shifted, delta);
  n->a = std::make_shared<RandomLaw>(law);
  return RandomLaw(n);
}

RandomLaw RandomLaw::scaled(const RandomLaw& law, double c) {
  if (!std::isfinite(c)) throw DomainError("scale factor must be finite");
  auto n = leaf(Kind::Scaled, c);
  n->a = std::make_shared<RandomLaw>(law);
  return RandomLaw(n);
}

RandomLaw RandomLaw::sum(const RandomLaw& a, const RandomLaw& b) {
  auto n = leaf(Kind::Sum);
  n->a = std::make_shared<RandomLaw>(a);
  n->b = std::make_shared<RandomLaw>(b);
  return RandomLaw(n);
}

RandomLaw RandomLaw::empirical(std::vector<double> samples) {
  if (samples.empty()) throw DomainError("empirical law needs at least one sample");
  for (double v : samples)
    if (!std::isfinite(v)) throw DomainError("empirical samples must be finite");
  auto n = leaf(Kind::Empirical);
  n->samples = std::make_shared<const std::vector<double>>(std::move(samples));
  return RandomLaw(n);
}

const RandomLaw& RandomLaw::left() const {
  if (!node_->a) throw DomainError("law has no operand");
  return *node_->a;
}

const RandomLaw& RandomLaw::right() const {
  if (!node_->b) throw DomainError("law has no second operand");
  return *node_->b;
}

const std::vector<double>& RandomLaw::samples() const {
  if (!node_->samples) throw DomainError("law is not empirical");
  return *node_->samples;
}

std::string RandomLaw::name() const {
  switch (kind()) {
    case Kind::Gaussian: return "gaussian";
    case Kind::Uniform: return "uniform";
    case Kind::Laplace: return "laplace";
    case Kind::Cauchy: return "cauchy";
    case Kind::SaS: return "sas";
    case Kind::Shifted: return "shifted";
    case Kind::Scaled: return "scaled";
    case Kind::Sum: return "sum";
    case Kind::Empirical: return "empirical";
  }
  return "unknown";
}

std::string RandomLaw::describe() const {
  switch (kind()) {
    case Kind::Gaussian: return "sigma=" + num(p0());
    case Kind::Uniform: return "a=" + num(p0());
    case Kind::Laplace: return "b=" + num(p0());
    case Kind::Cauchy: return "gamma=" + num(p0());
    case Kind::SaS: return "alpha=" + num(p0()) + ";gamma=" + num(p1());
    case Kind::Shifted: return left().name() + "(" + left().describe() + ")+" + num(p0());
    case Kind::Scaled: return num(p0()) + "*" + left().name() + "(" + left().describe() + ")";
    case Kind::Sum:
      return left().name() + "(" + left().describe() + ")+" + right().name() + "(" + right().describe() + ")";
    case Kind::Empirical: return "n=" + std::to_string(samples().size());
  }
  return "";
}

namespace {

RandomLaw parse_leaf(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.empty()) throw ConfigError("empty law specification");
  auto arg = [&](std::size_t i) {
    if (i >= parts.size()) throw ConfigError("law '" + text + "': missing parameter");
    try {
      std::size_t pos = 0;
      double v = std::stod(parts[i], &pos);
      if (pos != parts[i].size()) throw ConfigError("law '" + text + "': bad number");
      return v;
    } catch (const std::logic_error&) {
      throw ConfigError("law '" + text + "': bad number '" + parts[i] + "'");
    }
  };
  const std::string& k = parts[0];
  std::size_t want = 2;
  RandomLaw out = RandomLaw::gaussian(1.0);
  try {
    if (k == "gaussian") {
      out = RandomLaw::gaussian(arg(1));
    } else if (k == "uniform") {
      out = RandomLaw::uniform(arg(1));
    } else if (k == "laplace") {
      out = RandomLaw::laplace(arg(1));
    } else if (k == "cauchy") {
      out = RandomLaw::cauchy(arg(1));
    } else if (k == "sas" || k == "stable") {
      out = RandomLaw::sas(arg(1), arg(2));
      want = 3;
    } else {
      throw ConfigError("unknown law kind '" + k + "'");
    }
  } catch (const DomainError& e) {
    throw ConfigError(std::string("law '") + text + "': " + e.what());
  }
  if (parts.size() != want) throw ConfigError("law '" + text + "': wrong parameter count");
  return out;
}

}  // namespace

RandomLaw parse_law(const std::string& text) {
  std::vector<RandomLaw> terms;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, '+')) terms.push_back(parse_leaf(item));
  if (terms.empty()) throw ConfigError("empty law specification");
  RandomLaw out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) out = RandomLaw::sum(out, terms[i]);
  return out;
}

}  // namespace stable_info
