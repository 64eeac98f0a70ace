#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bidb {

using TimePoint = int;
using ActionId = int;
using PropId = int;
using AtomId = int;

enum class AtomKind { prop, post, pre };

struct AtomData {
  AtomKind kind;
  int index = -1;               // prop or action id (prop/post)
  std::vector<ActionId> word;   // pre only, non-empty
};

// Finite vocabulary of a session: proposition names, action names and the
// time horizon. All valuation atoms that can ever occur in a model at this
// horizon are interned up front, so Signature values are immutable and can
// be shared freely.
//
// Atom ids are dense and canonical: props (sorted), then post(a) per sorted
// action, then pre(w) words ordered by (length, lexicographic).
class Signature {
 public:
  Signature(std::vector<std::string> props, std::vector<std::string> acts, int horizon);

  int horizon() const { return d_->horizon; }
  const std::vector<std::string>& props() const { return d_->props; }
  const std::vector<std::string>& acts() const { return d_->acts; }
  int prop_count() const { return static_cast<int>(d_->props.size()); }
  int action_count() const { return static_cast<int>(d_->acts.size()); }

  ActionId action_id(std::string_view name) const;  // -1 when unknown
  PropId prop_id(std::string_view name) const;      // -1 when unknown
  const std::string& action_name(ActionId a) const { return d_->acts[a]; }
  const std::string& prop_name(PropId p) const { return d_->props[p]; }

  int atom_count() const { return static_cast<int>(d_->atoms.size()); }
  const AtomData& atom(AtomId id) const { return d_->atoms[id]; }
  AtomId prop_atom(PropId p) const { return p; }
  AtomId post_atom(ActionId a) const { return prop_count() + a; }
  // -1 when the word is not interned (too long for the horizon).
  AtomId pre_atom(const std::vector<ActionId>& word) const;

  // Atoms that may appear in a valuation at tree depth d: props, posts and
  // pre-words of length <= horizon - d.
  const std::vector<AtomId>& atoms_at_depth(int depth) const { return d_->atoms_by_depth[depth]; }
  bool atom_legal_at_depth(AtomId id, int depth) const;

  std::string atom_name(AtomId id) const;                       // "p", "post(a)", "pre(a,b)"
  std::optional<AtomId> parse_atom(std::string_view text) const;  // inverse of atom_name

  bool operator==(const Signature& other) const;

 private:
  struct Data {
    std::vector<std::string> props, acts;
    int horizon = 1;
    std::vector<AtomData> atoms;
    std::map<std::vector<ActionId>, AtomId> pre_index;
    std::unordered_map<std::string, int> prop_ids, act_ids;
    std::vector<std::vector<AtomId>> atoms_by_depth;
  };
  std::shared_ptr<const Data> d_;
};

bool valid_name(std::string_view name);  // [a-z][a-z0-9_]*, not a grammar constant

}  // namespace bidb
