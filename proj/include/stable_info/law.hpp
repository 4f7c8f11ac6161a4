#pragma once

#include <memory>
#include <string>
#include <vector>

namespace stable_info {

// Random laws as an immutable expression tree. Components of a Sum are
// independent.
class RandomLaw {
 public:
  enum class Kind { Gaussian, Uniform, Laplace, Cauchy, SaS, Shifted, Scaled, Sum, Empirical };

  static RandomLaw gaussian(double sigma);
  static RandomLaw uniform(double a);  // U[-a, a]
  static RandomLaw laplace(double b);  // density exp(-|x|/b) / 2b
  static RandomLaw cauchy(double gamma);
  static RandomLaw sas(double alpha, double gamma);
  static RandomLaw shifted(const RandomLaw& law, double delta);
  static RandomLaw scaled(const RandomLaw& law, double c);
  static RandomLaw sum(const RandomLaw& a, const RandomLaw& b);
  static RandomLaw empirical(std::vector<double> samples);

  Kind kind() const { return node_->kind; }
  double p0() const { return node_->p0; }
  double p1() const { return node_->p1; }
  const RandomLaw& left() const;
  const RandomLaw& right() const;
  const std::vector<double>& samples() const;

  /// Short identifier such as "gaussian", "sum".
  std::string name() const;
  /// Parameter string, e.g. "sigma=1.414214" or "(gaussian(sigma=1)+sas(alpha=1.8,gamma=1))".
  std::string describe() const;

  struct Node {
    Kind kind;
    double p0 = 0.0;
    double p1 = 0.0;
    std::shared_ptr<const RandomLaw> a, b;
    std::shared_ptr<const std::vector<double>> samples;
  };
  explicit RandomLaw(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

 private:
  std::shared_ptr<const Node> node_;
};

// Parse "gaussian:1", "uniform:1", "laplace:1", "cauchy:1", "sas:1.5:1";
// independent sums join terms with "+", e.g. "laplace:1+gaussian:0.5".
RandomLaw parse_law(const std::string& text);

}  // namespace stable_info
