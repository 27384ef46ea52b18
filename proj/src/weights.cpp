#include "wrt/weights.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <mutex>
#include <stdexcept>

namespace wrt {

namespace {

// Neumaier running sum; the compensation term survives between extensions.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

void require_positive_theta(double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta))
    throw std::invalid_argument("weight parameter theta must be positive");
}

}  // namespace

struct WeightSequence::Impl {
  WeightFamily family = WeightFamily::uniform;
  double theta = 1.0;
  std::uint64_t k = 1;
  double exponent = 0.0;
  std::vector<double> table;       // custom values
  std::vector<std::string> raw;    // custom decimal tokens when file-backed
  std::string label;

  mutable std::mutex grow_mutex;
  mutable std::vector<double> prefix;
  mutable std::atomic<std::size_t> prefix_len{0};
  mutable CompensatedSum running;  // power/custom accumulation state

  double weight(std::uint64_t i) const {
    switch (family) {
      case WeightFamily::uniform:
        return 1.0;
      case WeightFamily::hoppe:
        return i == 1 ? theta : 1.0;
      case WeightFamily::theta_k:
        return i <= k ? theta : 1.0;
      case WeightFamily::power:
        return std::pow(static_cast<double>(i), exponent);
      case WeightFamily::custom:
        if (i > table.size())
          throw std::out_of_range("weight table exhausted at index " +
                                  std::to_string(i));
        return table[i - 1];
    }
    throw std::logic_error("unreachable weight family");
  }

  bool closed_form_prefix() const {
    return family == WeightFamily::uniform || family == WeightFamily::hoppe ||
           family == WeightFamily::theta_k;
  }

  double prefix_closed(std::uint64_t i) const {
    switch (family) {
      case WeightFamily::uniform:
        return static_cast<double>(i);
      case WeightFamily::hoppe:
        return theta + static_cast<double>(i - 1);
      case WeightFamily::theta_k:
        return i <= k ? theta * static_cast<double>(i)
                      : theta * static_cast<double>(k) +
                            static_cast<double>(i - k);
      default:
        throw std::logic_error("no closed-form prefix");
    }
  }

  void grow_prefix(std::size_t upto) const {
    std::lock_guard<std::mutex> lock(grow_mutex);
    std::size_t len = prefix_len.load(std::memory_order_acquire);
    if (len >= upto) return;
    prefix.reserve(std::max<std::size_t>(upto, prefix.capacity()));
    for (std::size_t i = len + 1; i <= upto; ++i) {
      if (closed_form_prefix()) {
        prefix.push_back(prefix_closed(i));
      } else {
        running.add(weight(i));
        prefix.push_back(running.value());
      }
    }
    prefix_len.store(upto, std::memory_order_release);
  }
};

WeightSequence::WeightSequence(std::shared_ptr<Impl> impl)
    : impl_(std::move(impl)) {}

WeightSequence WeightSequence::uniform() {
  auto impl = std::make_shared<Impl>();
  impl->family = WeightFamily::uniform;
  impl->label = "uniform";
  return WeightSequence(std::move(impl));
}

WeightSequence WeightSequence::hoppe(double theta) {
  require_positive_theta(theta);
  auto impl = std::make_shared<Impl>();
  impl->family = WeightFamily::hoppe;
  impl->theta = theta;
  impl->label = "hoppe:" + std::to_string(theta);
  return WeightSequence(std::move(impl));
}

WeightSequence WeightSequence::theta_k(double theta, std::uint64_t k) {
  require_positive_theta(theta);
  if (k < 1) throw std::invalid_argument("theta_k requires k >= 1");
  auto impl = std::make_shared<Impl>();
  impl->family = WeightFamily::theta_k;
  impl->theta = theta;
  impl->k = k;
  impl->label = "thetak:" + std::to_string(theta) + "," + std::to_string(k);
  return WeightSequence(std::move(impl));
}

WeightSequence WeightSequence::power(double exponent) {
  if (!std::isfinite(exponent))
    throw std::invalid_argument("power exponent must be finite");
  auto impl = std::make_shared<Impl>();
  impl->family = WeightFamily::power;
  impl->exponent = exponent;
  impl->label = "power:" + std::to_string(exponent);
  return WeightSequence(std::move(impl));
}

WeightSequence WeightSequence::custom(std::vector<double> table) {
  if (table.empty()) throw std::invalid_argument("custom weight table is empty");
  for (std::size_t i = 0; i < table.size(); ++i)
    if (!(table[i] > 0.0) || !std::isfinite(table[i]))
      throw std::invalid_argument("custom weight at index " +
                                  std::to_string(i + 1) +
                                  " is not a positive real");
  auto impl = std::make_shared<Impl>();
  impl->family = WeightFamily::custom;
  impl->table = std::move(table);
  impl->label = "custom[" + std::to_string(impl->table.size()) + "]";
  return WeightSequence(std::move(impl));
}

WeightSequence WeightSequence::custom_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open weights file: " + path);
  std::vector<double> values;
  std::vector<std::string> raw;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t'))
      line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) {
      // Blank lines are only tolerated at the end of the file.
      std::string rest;
      while (std::getline(in, rest))
        if (rest.find_first_not_of(" \t\r") != std::string::npos)
          throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                      ": blank line inside weight table");
      break;
    }
    line = line.substr(start);
    char* end = nullptr;
    const double v = std::strtod(line.c_str(), &end);
    if (end == line.c_str() || *end != '\0')
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": not a decimal number: '" + line + "'");
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": weight must be positive");
    values.push_back(v);
    raw.push_back(line);
  }
  WeightSequence seq = custom(std::move(values));
  seq.impl_->raw = std::move(raw);
  seq.impl_->label = "custom:" + path;
  return seq;
}

WeightSequence WeightSequence::from_descriptor(const std::string& descriptor) {
  const auto colon = descriptor.find(':');
  const std::string head = descriptor.substr(0, colon);
  const std::string args =
      colon == std::string::npos ? "" : descriptor.substr(colon + 1);
  auto parse_real = [&](const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end == s.c_str() || *end != '\0')
      throw std::invalid_argument("bad family descriptor: " + descriptor);
    return v;
  };
  if (head == "uniform") {
    if (!args.empty())
      throw std::invalid_argument("uniform takes no parameters");
    return uniform();
  }
  if (head == "hoppe") return hoppe(parse_real(args));
  if (head == "thetak") {
    const auto comma = args.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("thetak needs <theta>,<k>: " + descriptor);
    const double theta = parse_real(args.substr(0, comma));
    const long long k = std::atoll(args.c_str() + comma + 1);
    if (k < 1) throw std::invalid_argument("thetak needs integer k >= 1");
    return theta_k(theta, static_cast<std::uint64_t>(k));
  }
  if (head == "power") return power(parse_real(args));
  if (head == "custom") {
    if (args.empty())
      throw std::invalid_argument("custom needs a file path");
    return custom_from_file(args);
  }
  throw std::invalid_argument("unknown weight family: " + descriptor);
}

WeightFamily WeightSequence::family() const { return impl_->family; }
double WeightSequence::theta() const { return impl_->theta; }
std::uint64_t WeightSequence::k() const { return impl_->k; }
double WeightSequence::exponent() const { return impl_->exponent; }
const std::string& WeightSequence::label() const { return impl_->label; }

double WeightSequence::weight_at(std::uint64_t i) const {
  if (i < 1) throw std::invalid_argument("weight index starts at 1");
  return impl_->weight(i);
}

double WeightSequence::prefix_sum(std::uint64_t i) const {
  if (i < 1) throw std::invalid_argument("prefix index starts at 1");
  if (impl_->closed_form_prefix()) return impl_->prefix_closed(i);
  if (impl_->prefix_len.load(std::memory_order_acquire) < i)
    impl_->grow_prefix(i);
  return impl_->prefix[i - 1];
}

std::span<const double> WeightSequence::prefix_table(std::uint64_t upto) const {
  if (upto < 1) throw std::invalid_argument("prefix table needs upto >= 1");
  if (impl_->prefix_len.load(std::memory_order_acquire) < upto)
    impl_->grow_prefix(upto);
  return {impl_->prefix.data(), static_cast<std::size_t>(upto)};
}

std::uint64_t WeightSequence::max_index() const {
  return impl_->family == WeightFamily::custom
             ? impl_->table.size()
             : std::numeric_limits<std::uint64_t>::max();
}

std::optional<std::uint64_t> WeightSequence::constancy_index() const {
  switch (impl_->family) {
    case WeightFamily::uniform:
      return 0;
    case WeightFamily::hoppe:
      return impl_->theta == 1.0 ? 0 : 1;
    case WeightFamily::theta_k:
      return impl_->theta == 1.0 ? 0 : impl_->k;
    case WeightFamily::power:
      if (impl_->exponent == 0.0) return 0;
      return std::nullopt;
    case WeightFamily::custom: {
      std::uint64_t last = 0;
      for (std::size_t i = impl_->table.size(); i > 0; --i) {
        if (impl_->table[i - 1] != 1.0) {
          last = i;
          break;
        }
      }
      return last;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Rational>> WeightSequence::exact_weights(
    std::uint64_t upto) const {
  if (impl_->family != WeightFamily::custom) return std::nullopt;
  if (upto > impl_->table.size())
    throw std::out_of_range("weight table exhausted at index " +
                            std::to_string(impl_->table.size() + 1));
  std::vector<Rational> out;
  out.reserve(upto);
  for (std::uint64_t i = 0; i < upto; ++i) {
    if (i < impl_->raw.size())
      out.push_back(parse_decimal_rational(impl_->raw[i]));
    else
      out.emplace_back(impl_->table[i]);  // doubles convert exactly
  }
  return out;
}

std::optional<std::vector<Rational>> WeightSequence::exact_prefix_sums(
    std::uint64_t upto) const {
  auto weights = exact_weights(upto);
  if (!weights) return std::nullopt;
  Rational acc = 0;
  for (auto& w : *weights) {
    acc += w;
    w = acc;
  }
  return weights;
}

Rational parse_decimal_rational(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  boost::multiprecision::cpp_int mantissa = 0;
  long long scale = 0;  // power of ten dividing the mantissa
  bool any_digit = false;
  for (; pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
       ++pos) {
    mantissa = mantissa * 10 + (text[pos] - '0');
    any_digit = true;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    for (; pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]));
         ++pos) {
      mantissa = mantissa * 10 + (text[pos] - '0');
      ++scale;
      any_digit = true;
    }
  }
  long long exp10 = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool exp_neg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      exp_neg = text[pos] == '-';
      ++pos;
    }
    bool any_exp = false;
    for (; pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]));
         ++pos) {
      exp10 = exp10 * 10 + (text[pos] - '0');
      any_exp = true;
    }
    if (!any_exp) throw std::invalid_argument("bad exponent in: " + text);
    if (exp_neg) exp10 = -exp10;
  }
  if (!any_digit || pos != text.size())
    throw std::invalid_argument("not a decimal number: '" + text + "'");
  Rational value(mantissa);
  const long long net = exp10 - scale;
  boost::multiprecision::cpp_int pow10 = 1;
  for (long long i = 0; i < std::llabs(net); ++i) pow10 *= 10;
  if (net >= 0)
    value *= Rational(pow10);
  else
    value /= Rational(pow10);
  return negative ? -value : value;
}

}  // namespace wrt
