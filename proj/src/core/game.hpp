// Copyright 2026 The rhseed Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RHSEED_CORE_GAME_HPP_
#define RHSEED_CORE_GAME_HPP_

#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "core/rng.hpp"

namespace rhseed {

struct ActionId {
  int index = 0;
  auto operator<=>(const ActionId&) const = default;
};

enum class Outcome { kOngoing, kWin, kLoss };

std::string_view to_string(Outcome outcome);

// Forward-model game. Concrete games hold their payload as plain members and
// implement apply(); the base class owns the bookkeeping shared by all games
// (score, tick counter, time limit, outcome).
//
// Terminal states expose exactly one legal action (a no-op), so a plan that
// runs past the end of a game still decodes to something well-defined.
class Game {
 public:
  virtual ~Game() = default;

  virtual std::unique_ptr<Game> clone() const = 0;
  virtual std::string_view name() const = 0;
  virtual std::string to_string() const = 0;
  virtual bool is_stochastic() const = 0;

  // Number of legal actions. Always >= 1; exactly 1 once terminal.
  int legal_actions() const { return is_terminal() ? 1 : action_count(); }

  // Applies `action` and increments the tick. Throws ContractViolation on a
  // terminal state or an out-of-range action.
  void advance(ActionId action, Rng& rng);

  double score() const { return score_; }
  int tick() const { return tick_; }
  int max_ticks() const { return max_ticks_; }
  Outcome outcome() const { return outcome_; }
  bool is_terminal() const { return outcome_ != Outcome::kOngoing; }

  bool equals(const Game& other) const;

 protected:
  explicit Game(int max_ticks);

  virtual int action_count() const = 0;
  virtual void apply(ActionId action, Rng& rng) = 0;
  virtual bool payload_equals(const Game& other) const = 0;

  void add_score(double delta) { score_ += delta; }
  void set_outcome(Outcome outcome) { outcome_ = outcome; }

 private:
  double score_ = 0.0;
  int tick_ = 0;
  int max_ticks_;
  Outcome outcome_ = Outcome::kOngoing;
};

// Value-semantics handle around a Game. Copies are deep: advancing a copy
// never touches the original.
class GameState {
 public:
  explicit GameState(std::unique_ptr<Game> game);
  GameState(const GameState& other);
  GameState& operator=(const GameState& other);
  GameState(GameState&&) noexcept = default;
  GameState& operator=(GameState&&) noexcept = default;

  int legal_actions() const { return game_->legal_actions(); }
  void advance_in_place(ActionId action, Rng& rng) {
    game_->advance(action, rng);
  }

  Outcome outcome() const { return game_->outcome(); }
  bool is_terminal() const { return game_->is_terminal(); }
  double score() const { return game_->score(); }
  int tick() const { return game_->tick(); }
  int max_ticks() const { return game_->max_ticks(); }
  std::string_view name() const { return game_->name(); }
  bool is_stochastic() const { return game_->is_stochastic(); }
  std::string to_string() const { return game_->to_string(); }

  const Game& game() const { return *game_; }

  friend bool operator==(const GameState& a, const GameState& b) {
    return a.game_->equals(*b.game_);
  }

 private:
  std::unique_ptr<Game> game_;
};

// Free-function forms of the forward-model operations.
inline int legal_actions(const GameState& state) {
  return state.legal_actions();
}
inline Outcome outcome(const GameState& state) { return state.outcome(); }
inline double score(const GameState& state) { return state.score(); }
inline GameState copy_state(const GameState& state) { return state; }
GameState advance(const GameState& state, ActionId action, Rng& rng);

// --- The toy suite ---------------------------------------------------------

inline constexpr int kNumLevels = 5;
inline constexpr int kDefaultMaxTicks = 100;
inline constexpr int kBanditMaxTicks = 50;

// 1-D line. Actions: 0 left, 1 right, 2 noop. Score tracks the position
// (+1 per step right, -1 per step left, the left wall at 0 blocks).
// Win on reaching `goal`.
class Corridor final : public Game {
 public:
  enum Action { kLeft = 0, kRight = 1, kNoop = 2 };
  explicit Corridor(int goal, int max_ticks = kDefaultMaxTicks);

  std::unique_ptr<Game> clone() const override;
  std::string_view name() const override { return "corridor"; }
  std::string to_string() const override;
  bool is_stochastic() const override { return false; }

  int position() const { return pos_; }
  int goal() const { return goal_; }
  void set_position(int pos);

 protected:
  int action_count() const override { return 3; }
  void apply(ActionId action, Rng& rng) override;
  bool payload_equals(const Game& other) const override;

 private:
  int goal_;
  int pos_ = 0;
};

// Deceptive line. Left of the start is a pit: every pit cell holds a one-off
// 0.1 pickup, and once inside, moving right is blocked. The only way to win
// is to walk right across `goal` empty cells without stepping into the pit.
// Actions: 0 left, 1 right, 2 noop.
class TrapCorridor final : public Game {
 public:
  enum Action { kLeft = 0, kRight = 1, kNoop = 2 };
  static constexpr double kPickup = 0.1;
  explicit TrapCorridor(int goal, int max_ticks = kDefaultMaxTicks);

  std::unique_ptr<Game> clone() const override;
  std::string_view name() const override { return "trapcorridor"; }
  std::string to_string() const override;
  bool is_stochastic() const override { return false; }

  int position() const { return pos_; }
  int goal() const { return goal_; }

 protected:
  int action_count() const override { return 3; }
  void apply(ActionId action, Rng& rng) override;
  bool payload_equals(const Game& other) const override;

 private:
  int goal_;
  int pos_ = 0;
  int leftmost_ = 0;  // pickups in [leftmost_, -1] are collected
};

// Three-row grid. The avatar walks the middle row from column 0 to the last
// column; rows 0 and 2 are cliffs everywhere except column 0. Stepping onto
// a cliff loses. +1 score for each new column reached.
// Actions: 0 left, 1 right, 2 up, 3 down, 4 noop.
class CliffWalk final : public Game {
 public:
  enum Action { kLeft = 0, kRight = 1, kUp = 2, kDown = 3, kNoop = 4 };
  static constexpr int kRows = 3;
  explicit CliffWalk(int width, int max_ticks = kDefaultMaxTicks);

  std::unique_ptr<Game> clone() const override;
  std::string_view name() const override { return "cliffwalk"; }
  std::string to_string() const override;
  bool is_stochastic() const override { return false; }

  int row() const { return row_; }
  int col() const { return col_; }
  int width() const { return width_; }
  bool is_cliff(int row, int col) const { return row != 1 && col > 0; }

 protected:
  int action_count() const override { return 5; }
  void apply(ActionId action, Rng& rng) override;
  bool payload_equals(const Game& other) const override;

 private:
  int width_;
  int row_ = 1;
  int col_ = 0;
  int best_col_ = 0;
};

// Square grid with NPCs that flee the avatar. Each tick, after the avatar
// moves, every live NPC draws exactly two samples: a coin (flee greedily with
// probability 1/2) and a direction used when the coin says "wander".
// +1 per capture; Win when all NPCs are captured.
// Actions: 0 left, 1 right, 2 up, 3 down, 4 noop.
class StochasticChase final : public Game {
 public:
  enum Action { kLeft = 0, kRight = 1, kUp = 2, kDown = 3, kNoop = 4 };
  struct Cell {
    int x = 0;
    int y = 0;
    bool operator==(const Cell&) const = default;
  };
  static constexpr double kFleeProbability = 0.5;

  StochasticChase(int size, std::vector<Cell> npcs,
                  int max_ticks = kDefaultMaxTicks);

  std::unique_ptr<Game> clone() const override;
  std::string_view name() const override { return "stochasticchase"; }
  std::string to_string() const override;
  bool is_stochastic() const override { return true; }

  Cell avatar() const { return avatar_; }
  const std::vector<Cell>& npcs() const { return npcs_; }
  int size() const { return size_; }

 protected:
  int action_count() const override { return 5; }
  void apply(ActionId action, Rng& rng) override;
  bool payload_equals(const Game& other) const override;

 private:
  Cell step(Cell from, int direction) const;
  void capture();

  int size_;
  Cell avatar_;
  std::vector<Cell> npcs_;
};

// Two-armed Bernoulli bandit; one sample per pull. Reward 1 on success.
// The game lasts max_ticks pulls and is won when the total reward reaches
// kWinFraction of max_ticks.
class Bandit final : public Game {
 public:
  static constexpr double kGoodMean = 0.7;
  static constexpr double kBadMean = 0.3;
  static constexpr double kWinFraction = 0.6;

  explicit Bandit(int good_arm, int max_ticks = kBanditMaxTicks);

  std::unique_ptr<Game> clone() const override;
  std::string_view name() const override { return "bandit"; }
  std::string to_string() const override;
  bool is_stochastic() const override { return true; }

  int good_arm() const { return good_arm_; }
  double arm_mean(int arm) const {
    return arm == good_arm_ ? kGoodMean : kBadMean;
  }

 protected:
  int action_count() const override { return 2; }
  void apply(ActionId action, Rng& rng) override;
  bool payload_equals(const Game& other) const override;

 private:
  int good_arm_;
};

// --- Game construction -----------------------------------------------------

struct GameSpec {
  std::string name;
  int level = 0;
  bool stochastic = false;

  // Parses "name:level", e.g. "corridor:0". Throws std::invalid_argument on
  // an unknown game or a level outside [0, 4].
  static GameSpec parse(std::string_view text);
  std::string to_string() const;
  bool operator==(const GameSpec&) const = default;
};

const std::vector<std::string>& game_names();
bool is_known_game(std::string_view name);

// Builds the initial state for (name, level). Deterministic in its inputs.
GameState make_initial_state(const GameSpec& spec);
GameState make_initial_state(std::string_view name, int level);

}  // namespace rhseed

#endif  // RHSEED_CORE_GAME_HPP_
