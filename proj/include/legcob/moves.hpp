#pragma once

#include <optional>

#include "legcob/front.hpp"

namespace legcob {

// Elementary cobordism moves between front words, bottom-to-top.  The
// direction-reversed R-moves carry a trailing '-' in text form.  Death is
// never enumerated or searched; scripts may use it behind an opt-in flag.
enum class MoveKind {
  R1a,
  R1b,
  R2a,
  R2b,
  R3,
  SaddleUp,
  Birth,
  Death,
  FarCommute,
  R1aInv,
  R1bInv,
  R2aInv,
  R2bInv,
};

std::string kind_name(MoveKind k);
MoveKind parse_kind(const std::string& s);  // SyntaxError on unknown names

struct MoveSite {
  MoveKind kind;
  int index = 0;    // insertion slot or 0-based pattern start
  int variant = 0;  // sub-case: host/birth row or chirality selector

  bool operator==(const MoveSite&) const = default;
};

// Every site where some move schema matches.  Applying any returned site
// succeeds and yields a valid front.
std::vector<MoveSite> enumerate_moves(const FrontWord& w);

// Result of a move: the new word plus the edit window (tokens
// [cut_at, cut_at+cut_len) were replaced by rep_len tokens), which is what
// orientation transport needs.
struct MoveResult {
  FrontWord word;
  int cut_at = 0;
  int cut_len = 0;
  int rep_len = 0;
};

// Throws InvalidSite when the site does not match the word.
MoveResult apply_move(const FrontWord& w, const MoveSite& s);

// Orientation transport across an edit: segments at gaps left of the edit
// window keep their direction, gaps right of it shift, interior gaps are
// dropped (the seeded re-trace recovers them).
std::map<Seg, int> carry_dirs(const Orientation& o, const MoveResult& r);

// Swap of the far-commuting events p, p+1 (plane isotopy), or nullopt.
std::optional<FrontWord> try_far_commute(const FrontWord& w, int p);

// Greedy bubble pass toward the lexicographically least word reachable by
// far commutations (tokens ranked L < R < X, then by row).  `trace`, when
// given, records the swap positions applied.
FrontWord normal_form(FrontWord w, std::vector<int>* trace = nullptr);

// word[p] must be R_i with L_i next.  The saddle is orientation-coherent
// when the row-i strand keeps its horizontal direction across the pair.
bool saddle_coherent(const FrontWord& w, int p, const Orientation& o);

struct Script {
  FrontWord bottom;
  std::vector<MoveSite> steps;
};

// Text form: line "FRONT <word>", then "MOVE <kind> <index> [<variant>]"
// lines; '#' comments.
Script parse_script(const std::string& text);
std::string serialize_script(const Script& s);

struct CobordismReport {
  FrontWord top;
  int chi = 0;
  int births = 0;
  int saddles = 0;
  int deaths = 0;
  int tb_bottom = 0;
  int tb_top = 0;
  bool oriented = true;  // every saddle was orientation-coherent
  bool capped = false;
  std::optional<int> genus;  // nullopt renders as "non-surface"
  bool ok = false;
  std::string diagnostics;
};

// Replays the script, threading the orientation through every step.
// Throws StepError (naming the 1-based step) when a step cannot be
// applied; Death steps additionally require allow_caps.
CobordismReport verify_script(const Script& s, bool allow_caps = false);

struct SearchBudget {
  int max_depth = 4;
  long long max_states = 20000;
  int max_events = 24;
};

struct SearchResult {
  bool found = false;
  bool budget_exceeded = false;  // some branch was pruned by the budget
  int depth = 0;                 // moves in the found script (no FarCommute)
  long long states = 0;
  Script script;
};

// Breadth-first search from `from` to `to` over fronts deduplicated by
// far-commutation normal form.  Deterministic for a fixed budget; any
// returned script passes verify_script and ends at `to` literally.
SearchResult search_cobordism(const FrontWord& from, const FrontWord& to,
                              const SearchBudget& budget);

}  // namespace legcob
