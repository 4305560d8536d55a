#include "largeness/subset_mask.hpp"

#include <algorithm>

#include "largeness/error.hpp"

namespace largeness {

  std::string_view errc_name(Errc code) noexcept {
    switch (code) {
      case Errc::BadShape: return "BadShape";
      case Errc::BadEntry: return "BadEntry";
      case Errc::NonAssociative: return "NonAssociative";
      case Errc::Overflow: return "Overflow";
      case Errc::BoundExceeded: return "BoundExceeded";
      case Errc::EmptyBase: return "EmptyBase";
      case Errc::EmptyCore: return "EmptyCore";
      case Errc::CoreNotSubsemigroup: return "CoreNotSubsemigroup";
      case Errc::WidthMismatch: return "WidthMismatch";
      case Errc::InvalidArgument: return "InvalidArgument";
      case Errc::NotGoodFamily: return "NotGoodFamily";
      case Errc::BlockOrderViolation: return "BlockOrderViolation";
      case Errc::TableIncomplete: return "TableIncomplete";
      case Errc::NoIdentity: return "NoIdentity";
      case Errc::FipViolated: return "FipViolated";
      case Errc::EmptySet: return "EmptySet";
      case Errc::Parse: return "Parse";
    }
    return "Unknown";
  }

  namespace {
    void check_same_width(SubsetMask const& a, SubsetMask const& b) {
      if (a.width() != b.width()) {
        throw Error(Errc::WidthMismatch,
                    "subset widths " + std::to_string(a.width()) + " and "
                        + std::to_string(b.width()) + " differ",
                    {a.width(), b.width()});
      }
    }
  }  // namespace

  SubsetMask::SubsetMask(std::size_t width, std::uint64_t bits) : _bits(bits), _width(width) {
    if (width > max_width) {
      throw Error(Errc::Overflow,
                  "subset width " + std::to_string(width) + " exceeds "
                      + std::to_string(max_width),
                  {width});
    }
    if ((bits & ~width_mask(width)) != 0) {
      throw Error(Errc::InvalidArgument, "subset bits outside the carrier");
    }
  }

  SubsetMask SubsetMask::full(std::size_t width) {
    return SubsetMask(width, width_mask(width));
  }

  SubsetMask SubsetMask::single(std::size_t width, Element x) {
    SubsetMask result(width);
    result.insert(x);
    return result;
  }

  SubsetMask SubsetMask::of(std::size_t width, std::initializer_list<Element> xs) {
    return from_elements(width, std::span<Element const>(xs.begin(), xs.size()));
  }

  SubsetMask SubsetMask::from_elements(std::size_t width, std::span<Element const> xs) {
    SubsetMask result(width);
    for (Element x : xs) {
      result.insert(x);
    }
    return result;
  }

  void SubsetMask::insert(Element x) {
    if (x >= _width) {
      throw Error(Errc::InvalidArgument,
                  "element " + std::to_string(x) + " outside carrier of size "
                      + std::to_string(_width),
                  {x, _width});
    }
    _bits |= std::uint64_t{1} << x;
  }

  void SubsetMask::erase(Element x) {
    if (x < _width) {
      _bits &= ~(std::uint64_t{1} << x);
    }
  }

  bool SubsetMask::is_subset_of(SubsetMask const& other) const {
    check_same_width(*this, other);
    return (_bits & ~other._bits) == 0;
  }

  bool SubsetMask::intersects(SubsetMask const& other) const {
    check_same_width(*this, other);
    return (_bits & other._bits) != 0;
  }

  SubsetMask SubsetMask::complement() const {
    return SubsetMask(_width, ~_bits & width_mask(_width));
  }

  SubsetMask& SubsetMask::operator|=(SubsetMask const& other) {
    check_same_width(*this, other);
    _bits |= other._bits;
    return *this;
  }

  SubsetMask& SubsetMask::operator&=(SubsetMask const& other) {
    check_same_width(*this, other);
    _bits &= other._bits;
    return *this;
  }

  SubsetMask& SubsetMask::operator-=(SubsetMask const& other) {
    check_same_width(*this, other);
    _bits &= ~other._bits;
    return *this;
  }

  std::vector<Element> SubsetMask::elements() const {
    std::vector<Element> result;
    result.reserve(count());
    for_each([&](Element x) { result.push_back(x); });
    return result;
  }

  std::string SubsetMask::to_string() const {
    std::string out = "{";
    bool        first = true;
    for_each([&](Element x) {
      if (!first) {
        out += ',';
      }
      first = false;
      out += std::to_string(x);
    });
    out += '}';
    return out;
  }

  bool canonical_less(SubsetMask const& a, SubsetMask const& b) {
    if (a.count() != b.count()) {
      return a.count() < b.count();
    }
    auto const ea = a.elements();
    auto const eb = b.elements();
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
  }

  bool size_bits_less(SubsetMask const& a, SubsetMask const& b) {
    if (a.count() != b.count()) {
      return a.count() < b.count();
    }
    return a.bits() < b.bits();
  }

}  // namespace largeness
