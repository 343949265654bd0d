#include "vaisman/gen_section.hpp"

#include <algorithm>

namespace vaisman {

GenSection::GenSection(DoubledSpace space)
    : space_(space), vec_(space.dim(), Poly(space)), form_(space.dim(), Poly(space)) {}

GenSection::GenSection(std::vector<Poly> vec, std::vector<Poly> form)
    : space_(vec.empty() ? DoubledSpace(form.empty() ? 1 : form.front().space().dim())
                         : vec.front().space()),
      vec_(std::move(vec)),
      form_(std::move(form)) {
  if (vec_.size() != space_.dim() || form_.size() != space_.dim()) {
    throw std::invalid_argument("generalized section needs exactly D vector and D form components");
  }
  for (const auto* part : {&vec_, &form_}) {
    for (const auto& p : *part) {
      if (!(p.space() == space_)) throw SpaceMismatch("section components over different spaces");
    }
  }
}

const Poly& GenSection::component(std::size_t m) const {
  return m < dim() ? vec_.at(m) : form_.at(m - dim());
}

Poly& GenSection::component(std::size_t m) {
  return m < dim() ? vec_.at(m) : form_.at(m - dim());
}

bool GenSection::is_zero() const {
  auto zero = [](const Poly& p) { return p.is_zero(); };
  return std::all_of(vec_.begin(), vec_.end(), zero) &&
         std::all_of(form_.begin(), form_.end(), zero);
}

void GenSection::require_same_space(const GenSection& other) const {
  if (!(space_ == other.space_)) {
    throw SpaceMismatch("sections over doubled spaces of different dimension (" +
                        std::to_string(space_.dim()) + " vs " +
                        std::to_string(other.space_.dim()) + ")");
  }
}

GenSection& GenSection::operator+=(const GenSection& other) {
  require_same_space(other);
  for (std::size_t mu = 0; mu < dim(); ++mu) {
    vec_[mu] += other.vec_[mu];
    form_[mu] += other.form_[mu];
  }
  return *this;
}

GenSection& GenSection::operator-=(const GenSection& other) {
  require_same_space(other);
  for (std::size_t mu = 0; mu < dim(); ++mu) {
    vec_[mu] -= other.vec_[mu];
    form_[mu] -= other.form_[mu];
  }
  return *this;
}

GenSection& GenSection::operator*=(const Rational& c) {
  for (std::size_t mu = 0; mu < dim(); ++mu) {
    vec_[mu] *= c;
    form_[mu] *= c;
  }
  return *this;
}

GenSection& GenSection::operator*=(const Poly& f) {
  if (!(f.space() == space_)) throw SpaceMismatch("function and section over different spaces");
  for (std::size_t mu = 0; mu < dim(); ++mu) {
    vec_[mu] *= f;
    form_[mu] *= f;
  }
  return *this;
}

GenSection GenSection::operator-() const {
  GenSection out = *this;
  out *= Rational(-1);
  return out;
}

std::string GenSection::to_string() const {
  std::string out = "vec(";
  for (std::size_t mu = 0; mu < dim(); ++mu) {
    if (mu > 0) out += ", ";
    out += vec_[mu].to_string();
  }
  out += ") form(";
  for (std::size_t mu = 0; mu < dim(); ++mu) {
    if (mu > 0) out += ", ";
    out += form_[mu].to_string();
  }
  return out + ")";
}

GenSection strong_constraint_project(const GenSection& e) {
  GenSection out(e.space());
  for (std::size_t mu = 0; mu < e.dim(); ++mu) {
    out.vec(mu) = strong_constraint_project(e.vec(mu));
    out.form(mu) = strong_constraint_project(e.form(mu));
  }
  return out;
}

}  // namespace vaisman
