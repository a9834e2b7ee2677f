#pragma once

/// Text descriptors for rings and modules, shared by corpus files and the
/// command line.
///
///   ring   := zn(N) | product(ring,ring,...) | quotient(ring,[g,...])
///           | idealization(ring,module) | localization(ring,[s,...])
///   module := self | cyclic(N) | product(module,module,...)
///           | quotient(module,[g,...]) | submodule(module,[g,...])
///
/// Generator/seed lists use canonical element indices of the structure they
/// refer to. localization seeds are closed multiplicatively before use.

#include <cctype>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "jmodlab/constructions.hpp"

namespace jmodlab {

struct ModuleDesc {
  enum class Kind { self, cyclic, product, quotient, submodule };
  Kind kind = Kind::self;
  std::size_t n = 0;
  std::vector<ModuleDesc> children;
  std::vector<elem> gens;

  std::string canonical() const {
    switch (kind) {
      case Kind::self: return "self";
      case Kind::cyclic: return "cyclic(" + std::to_string(n) + ")";
      case Kind::product: {
        std::string s = "product(";
        for (std::size_t i = 0; i < children.size(); ++i) {
          if (i) s += ",";
          s += children[i].canonical();
        }
        return s + ")";
      }
      case Kind::quotient:
      case Kind::submodule: {
        std::string s = (kind == Kind::quotient ? "quotient(" : "submodule(");
        s += children[0].canonical() + ",[";
        for (std::size_t i = 0; i < gens.size(); ++i) {
          if (i) s += ",";
          s += std::to_string(gens[i]);
        }
        return s + "])";
      }
    }
    return "?";
  }
};

struct RingDesc {
  enum class Kind { zn, product, quotient, idealization, localization };
  Kind kind = Kind::zn;
  std::size_t n = 0;
  std::vector<RingDesc> children;
  std::vector<ModuleDesc> module_arg;  // idealization: exactly one
  std::vector<elem> gens;              // quotient generators / localization seed

  std::string canonical() const {
    switch (kind) {
      case Kind::zn: return "zn(" + std::to_string(n) + ")";
      case Kind::product: {
        std::string s = "product(";
        for (std::size_t i = 0; i < children.size(); ++i) {
          if (i) s += ",";
          s += children[i].canonical();
        }
        return s + ")";
      }
      case Kind::quotient:
      case Kind::localization: {
        std::string s = (kind == Kind::quotient ? "quotient(" : "localization(");
        s += children[0].canonical() + ",[";
        for (std::size_t i = 0; i < gens.size(); ++i) {
          if (i) s += ",";
          s += std::to_string(gens[i]);
        }
        return s + "])";
      }
      case Kind::idealization:
        return "idealization(" + children[0].canonical() + "," + module_arg[0].canonical() + ")";
    }
    return "?";
  }
};

namespace detail {

class SpecParser {
public:
  explicit SpecParser(const std::string& text) : s_(text) {}

  RingDesc parse_ring_top() {
    RingDesc d = parse_ring();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing text after ring descriptor");
    return d;
  }

  ModuleDesc parse_module_top() {
    ModuleDesc d = parse_module();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing text after module descriptor");
    return d;
  }

private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("descriptor parse error at offset " +
                                std::to_string(pos_) + ": " + why + " in '" + s_ + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '-'))
      ++pos_;
    if (start == pos_) fail("expected identifier");
    return s_.substr(start, pos_ - start);
  }

  std::size_t integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return static_cast<std::size_t>(std::stoul(s_.substr(start, pos_ - start)));
  }

  std::vector<elem> int_list() {
    expect('[');
    std::vector<elem> out;
    skip_ws();
    if (eat(']')) return out;
    while (true) {
      out.push_back(static_cast<elem>(integer()));
      if (eat(']')) break;
      expect(',');
    }
    return out;
  }

  RingDesc parse_ring() {
    std::string name = ident();
    RingDesc d;
    if (name == "zn") {
      d.kind = RingDesc::Kind::zn;
      expect('(');
      d.n = integer();
      expect(')');
    } else if (name == "product") {
      d.kind = RingDesc::Kind::product;
      expect('(');
      d.children.push_back(parse_ring());
      while (eat(',')) d.children.push_back(parse_ring());
      expect(')');
    } else if (name == "quotient" || name == "localization") {
      d.kind = (name == "quotient") ? RingDesc::Kind::quotient : RingDesc::Kind::localization;
      expect('(');
      d.children.push_back(parse_ring());
      expect(',');
      d.gens = int_list();
      expect(')');
    } else if (name == "idealization") {
      d.kind = RingDesc::Kind::idealization;
      expect('(');
      d.children.push_back(parse_ring());
      expect(',');
      d.module_arg.push_back(parse_module());
      expect(')');
    } else {
      fail("unknown ring constructor '" + name + "'");
    }
    return d;
  }

  ModuleDesc parse_module() {
    std::string name = ident();
    ModuleDesc d;
    if (name == "self") {
      d.kind = ModuleDesc::Kind::self;
    } else if (name == "cyclic") {
      d.kind = ModuleDesc::Kind::cyclic;
      expect('(');
      d.n = integer();
      expect(')');
    } else if (name == "product") {
      d.kind = ModuleDesc::Kind::product;
      expect('(');
      d.children.push_back(parse_module());
      while (eat(',')) d.children.push_back(parse_module());
      expect(')');
    } else if (name == "quotient" || name == "submodule") {
      d.kind = (name == "quotient") ? ModuleDesc::Kind::quotient : ModuleDesc::Kind::submodule;
      expect('(');
      d.children.push_back(parse_module());
      expect(',');
      d.gens = int_list();
      expect(')');
    } else {
      fail("unknown module constructor '" + name + "'");
    }
    return d;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline RingDesc parse_ring_spec(const std::string& text) {
  return detail::SpecParser(text).parse_ring_top();
}

inline ModuleDesc parse_module_spec(const std::string& text) {
  return detail::SpecParser(text).parse_module_top();
}

inline RingPtr resolve_ring(const RingDesc& d, std::size_t cap);

inline ModulePtr resolve_module(const RingPtr& R, const ModuleDesc& d, std::size_t cap) {
  ModulePtr out;
  switch (d.kind) {
    case ModuleDesc::Kind::self:
      out = module_self(R);
      break;
    case ModuleDesc::Kind::cyclic:
      out = module_cyclic(R, d.n);
      break;
    case ModuleDesc::Kind::product: {
      std::vector<ModulePtr> fs;
      for (const auto& c : d.children) fs.push_back(resolve_module(R, c, cap));
      out = module_product(std::move(fs));
      break;
    }
    case ModuleDesc::Kind::quotient: {
      ModulePtr base = resolve_module(R, d.children[0], cap);
      out = module_quotient(base, submodule_generated(base, d.gens));
      break;
    }
    case ModuleDesc::Kind::submodule: {
      ModulePtr base = resolve_module(R, d.children[0], cap);
      out = module_from_submodule(submodule_generated(base, d.gens));
      break;
    }
  }
  if (out->order() > cap)
    throw std::invalid_argument("module " + d.canonical() + " exceeds the order cap " +
                                std::to_string(cap));
  return out;
}

inline RingPtr resolve_ring(const RingDesc& d, std::size_t cap) {
  RingPtr out;
  switch (d.kind) {
    case RingDesc::Kind::zn:
      out = ring_zn(d.n);
      break;
    case RingDesc::Kind::product: {
      std::vector<RingPtr> fs;
      for (const auto& c : d.children) fs.push_back(resolve_ring(c, cap));
      out = ring_product(std::move(fs));
      break;
    }
    case RingDesc::Kind::quotient: {
      RingPtr base = resolve_ring(d.children[0], cap);
      out = ring_quotient(base, ideal_generated(base, d.gens));
      break;
    }
    case RingDesc::Kind::idealization: {
      RingPtr base = resolve_ring(d.children[0], cap);
      out = idealization(base, resolve_module(base, d.module_arg[0], cap));
      break;
    }
    case RingDesc::Kind::localization: {
      RingPtr base = resolve_ring(d.children[0], cap);
      IndexSet seed(base->order());
      for (elem g : d.gens) {
        if (g >= base->order())
          throw std::invalid_argument("localization seed element out of range");
        seed.set(g);
      }
      out = localize_ring(base, multiplicative_closure(base, seed)).ring;
      break;
    }
  }
  if (out->order() > cap)
    throw std::invalid_argument("ring " + d.canonical() + " exceeds the order cap " +
                                std::to_string(cap));
  return out;
}

inline RingPtr resolve_ring(const std::string& text, std::size_t cap) {
  return resolve_ring(parse_ring_spec(text), cap);
}

inline ModulePtr resolve_module(const RingPtr& R, const std::string& text, std::size_t cap) {
  return resolve_module(R, parse_module_spec(text), cap);
}

}  // namespace jmodlab
