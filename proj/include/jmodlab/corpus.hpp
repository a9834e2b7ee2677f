#pragma once

/// Corpus files: a list of instance descriptors (ring spec, module spec,
/// optional named submodules and subsets) plus metadata. Line-oriented
/// key-value text; '#' starts a comment.
///
///   corpus <name>
///   max-order <n>
///
///   instance
///     ring zn(12)
///     module cyclic(6)
///     submodule N [3]
///     subset S [2]
///   end

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "jmodlab/descriptor.hpp"

namespace jmodlab {

inline constexpr std::size_t kDefaultCorpusCap = 36;

inline std::uint64_t fnv1a64(const std::string& data, std::uint64_t h = 14695981039346656037ull) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

struct NamedSet {
  std::string name;
  std::vector<elem> elems;
};

struct InstanceSpec {
  std::string ring_text;    // canonical descriptor text
  std::string module_text;  // canonical descriptor text
  std::vector<NamedSet> submodules;
  std::vector<NamedSet> subsets;
  std::string id;  // hash of the canonical spec

  std::string canonical() const {
    std::string s = "ring=" + ring_text + ";module=" + module_text;
    for (const auto& n : submodules) {
      s += ";submodule:" + n.name + "=[";
      for (std::size_t i = 0; i < n.elems.size(); ++i)
        s += (i ? "," : "") + std::to_string(n.elems[i]);
      s += "]";
    }
    for (const auto& n : subsets) {
      s += ";subset:" + n.name + "=[";
      for (std::size_t i = 0; i < n.elems.size(); ++i)
        s += (i ? "," : "") + std::to_string(n.elems[i]);
      s += "]";
    }
    return s;
  }
};

struct CorpusFile {
  std::string name = "unnamed";
  std::size_t max_order = kDefaultCorpusCap;
  std::vector<InstanceSpec> instances;
  std::string hash;  // over the raw file bytes
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

inline std::vector<elem> parse_bracket_list(const std::string& text, int line_no) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw std::invalid_argument("corpus line " + std::to_string(line_no) +
                                ": expected a [..] element list");
  std::vector<elem> out;
  std::string body = t.substr(1, t.size() - 2);
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    for (char c : item)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("corpus line " + std::to_string(line_no) +
                                    ": bad element '" + item + "'");
    out.push_back(static_cast<elem>(std::stoul(item)));
  }
  return out;
}

}  // namespace detail

inline CorpusFile parse_corpus(const std::string& content) {
  CorpusFile corpus;
  corpus.hash = hex64(fnv1a64(content));
  std::stringstream in(content);
  std::string raw;
  int line_no = 0;
  bool in_instance = false;
  InstanceSpec cur;

  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("corpus line " + std::to_string(line_no) + ": " + why);
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    line = detail::trim(line);
    if (line.empty()) continue;

    std::stringstream ls(line);
    std::string key;
    ls >> key;
    std::string rest = detail::trim(line.substr(key.size()));

    if (key == "corpus") {
      if (in_instance) fail("corpus header inside an instance block");
      if (rest.empty()) fail("corpus name missing");
      corpus.name = rest;
    } else if (key == "max-order") {
      if (in_instance) fail("max-order inside an instance block");
      try {
        corpus.max_order = std::stoul(rest);
      } catch (...) {
        fail("bad max-order value '" + rest + "'");
      }
      if (corpus.max_order < 2) fail("max-order must be at least 2");
    } else if (key == "instance") {
      if (in_instance) fail("nested instance block");
      in_instance = true;
      cur = InstanceSpec{};
    } else if (key == "end") {
      if (!in_instance) fail("end outside an instance block");
      if (cur.ring_text.empty()) fail("instance missing a ring line");
      if (cur.module_text.empty()) cur.module_text = "self";
      cur.id = hex64(fnv1a64(cur.canonical()));
      corpus.instances.push_back(cur);
      in_instance = false;
    } else if (key == "ring") {
      if (!in_instance) fail("ring line outside an instance block");
      try {
        cur.ring_text = parse_ring_spec(rest).canonical();
      } catch (const std::exception& e) {
        fail(e.what());
      }
    } else if (key == "module") {
      if (!in_instance) fail("module line outside an instance block");
      try {
        cur.module_text = parse_module_spec(rest).canonical();
      } catch (const std::exception& e) {
        fail(e.what());
      }
    } else if (key == "submodule" || key == "subset") {
      if (!in_instance) fail(key + " line outside an instance block");
      std::stringstream rs(rest);
      NamedSet ns;
      rs >> ns.name;
      if (ns.name.empty()) fail(key + " needs a name");
      std::string list = detail::trim(rest.substr(ns.name.size()));
      ns.elems = detail::parse_bracket_list(list, line_no);
      (key == "submodule" ? cur.submodules : cur.subsets).push_back(std::move(ns));
    } else {
      fail("unknown directive '" + key + "'");
    }
  }
  if (in_instance) fail("unterminated instance block");
  return corpus;
}

inline CorpusFile load_corpus(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open corpus file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_corpus(ss.str());
}

}  // namespace jmodlab
