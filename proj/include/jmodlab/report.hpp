#pragma once

/// Report value types shared by the harness and the CLI. Witnesses are
/// ordered key-value records rendered in a canonical text form, so reports
/// are byte-identical across runs and worker counts.

#include <optional>
#include <string>
#include <vector>

#include "jmodlab/index_set.hpp"

namespace jmodlab {

struct WitnessEntry {
  enum class Kind { scalar, list, text };
  Kind kind = Kind::scalar;
  std::string key;
  long long num = 0;
  std::vector<int> vals;
  std::string text;
};

struct Witness {
  std::vector<WitnessEntry> entries;

  Witness& add(const std::string& key, long long v) {
    entries.push_back({WitnessEntry::Kind::scalar, key, v, {}, {}});
    return *this;
  }

  Witness& add_list(const std::string& key, std::vector<int> v) {
    entries.push_back({WitnessEntry::Kind::list, key, 0, std::move(v), {}});
    return *this;
  }

  Witness& add_set(const std::string& key, const IndexSet& s) {
    std::vector<int> v;
    s.for_each([&](std::size_t i) { v.push_back(static_cast<int>(i)); });
    return add_list(key, std::move(v));
  }

  Witness& add_text(const std::string& key, std::string t) {
    entries.push_back({WitnessEntry::Kind::text, key, 0, {}, std::move(t)});
    return *this;
  }

  const WitnessEntry* find(const std::string& key) const {
    for (const auto& e : entries)
      if (e.key == key) return &e;
    return nullptr;
  }

  std::string render() const {
    std::string out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i) out += ";";
      const auto& e = entries[i];
      out += e.key + "=";
      switch (e.kind) {
        case WitnessEntry::Kind::scalar:
          out += std::to_string(e.num);
          break;
        case WitnessEntry::Kind::list: {
          out += "[";
          for (std::size_t j = 0; j < e.vals.size(); ++j) {
            if (j) out += ",";
            out += std::to_string(e.vals[j]);
          }
          out += "]";
          break;
        }
        case WitnessEntry::Kind::text:
          out += e.text;
          break;
      }
    }
    return out;
  }
};

enum class Status { verified, vacuous, violated };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::vacuous: return "vacuous";
    case Status::violated: return "violated";
  }
  return "?";
}

struct PropertyReport {
  std::string prop;
  std::string instance;
  Status status = Status::vacuous;
  std::optional<Witness> witness;
  long long hyp = 0;     // hypothesis instances that fired
  long long checks = 0;  // conclusion checks evaluated
  std::string note;      // deterministic annotations
};

}  // namespace jmodlab
