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

#include "core/game.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "core/check.hpp"

namespace rhseed {

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::kOngoing:
      return "ongoing";
    case Outcome::kWin:
      return "win";
    case Outcome::kLoss:
      return "loss";
  }
  return "unknown";
}

Game::Game(int max_ticks) : max_ticks_(max_ticks) {
  RHSEED_CHECK(max_ticks >= 1, "max_ticks must be positive");
}

void Game::advance(ActionId action, Rng& rng) {
  RHSEED_CHECK(!is_terminal(), "advance on a terminal state");
  RHSEED_CHECK(action.index >= 0 && action.index < action_count(),
               "action " + std::to_string(action.index) + " out of range");
  apply(action, rng);
  ++tick_;
  // Running out of time without winning is a loss.
  if (outcome_ == Outcome::kOngoing && tick_ >= max_ticks_) {
    outcome_ = Outcome::kLoss;
  }
}

bool Game::equals(const Game& other) const {
  return name() == other.name() && score_ == other.score_ &&
         tick_ == other.tick_ && max_ticks_ == other.max_ticks_ &&
         outcome_ == other.outcome_ && payload_equals(other);
}

GameState::GameState(std::unique_ptr<Game> game) : game_(std::move(game)) {
  RHSEED_CHECK(game_ != nullptr, "null game");
}

GameState::GameState(const GameState& other) : game_(other.game_->clone()) {}

GameState& GameState::operator=(const GameState& other) {
  if (this != &other) game_ = other.game_->clone();
  return *this;
}

GameState advance(const GameState& state, ActionId action, Rng& rng) {
  GameState next = state;
  next.advance_in_place(action, rng);
  return next;
}

// --- Corridor ----------------------------------------------------------------

Corridor::Corridor(int goal, int max_ticks) : Game(max_ticks), goal_(goal) {
  RHSEED_CHECK(goal >= 1, "corridor goal must be >= 1");
}

std::unique_ptr<Game> Corridor::clone() const {
  return std::make_unique<Corridor>(*this);
}

std::string Corridor::to_string() const {
  std::ostringstream out;
  out << "corridor pos=" << pos_ << " goal=" << goal_ << " score=" << score()
      << " tick=" << tick();
  return out.str();
}

void Corridor::set_position(int pos) {
  RHSEED_CHECK(pos >= 0 && pos < goal_, "position outside the corridor");
  add_score(pos - pos_);
  pos_ = pos;
}

void Corridor::apply(ActionId action, Rng&) {
  switch (action.index) {
    case kLeft:
      if (pos_ > 0) {
        --pos_;
        add_score(-1.0);
      }
      break;
    case kRight:
      ++pos_;
      add_score(1.0);
      if (pos_ == goal_) set_outcome(Outcome::kWin);
      break;
    default:
      break;
  }
}

bool Corridor::payload_equals(const Game& other) const {
  const auto& o = static_cast<const Corridor&>(other);
  return goal_ == o.goal_ && pos_ == o.pos_;
}

// --- TrapCorridor ------------------------------------------------------------

TrapCorridor::TrapCorridor(int goal, int max_ticks)
    : Game(max_ticks), goal_(goal) {
  RHSEED_CHECK(goal >= 1, "trap corridor goal must be >= 1");
}

std::unique_ptr<Game> TrapCorridor::clone() const {
  return std::make_unique<TrapCorridor>(*this);
}

std::string TrapCorridor::to_string() const {
  std::ostringstream out;
  out << "trapcorridor pos=" << pos_ << " goal=" << goal_
      << " leftmost=" << leftmost_ << " score=" << score()
      << " tick=" << tick();
  return out.str();
}

void TrapCorridor::apply(ActionId action, Rng&) {
  switch (action.index) {
    case kLeft:
      --pos_;
      if (pos_ < leftmost_) {
        leftmost_ = pos_;
        add_score(kPickup);
      }
      break;
    case kRight:
      if (pos_ < 0) break;  // no climbing back out of the pit
      ++pos_;
      if (pos_ == goal_) set_outcome(Outcome::kWin);
      break;
    default:
      break;
  }
}

bool TrapCorridor::payload_equals(const Game& other) const {
  const auto& o = static_cast<const TrapCorridor&>(other);
  return goal_ == o.goal_ && pos_ == o.pos_ && leftmost_ == o.leftmost_;
}

// --- CliffWalk ---------------------------------------------------------------

CliffWalk::CliffWalk(int width, int max_ticks)
    : Game(max_ticks), width_(width) {
  RHSEED_CHECK(width >= 2, "cliff walk needs at least two columns");
}

std::unique_ptr<Game> CliffWalk::clone() const {
  return std::make_unique<CliffWalk>(*this);
}

std::string CliffWalk::to_string() const {
  std::ostringstream out;
  for (int r = 0; r < kRows; ++r) {
    for (int c = 0; c < width_; ++c) {
      if (r == row_ && c == col_) {
        out << 'A';
      } else if (r == 1 && c == width_ - 1) {
        out << 'G';
      } else {
        out << (is_cliff(r, c) ? '#' : '.');
      }
    }
    out << '\n';
  }
  out << "score=" << score() << " tick=" << tick();
  return out.str();
}

void CliffWalk::apply(ActionId action, Rng&) {
  int r = row_;
  int c = col_;
  switch (action.index) {
    case kLeft:
      --c;
      break;
    case kRight:
      ++c;
      break;
    case kUp:
      --r;
      break;
    case kDown:
      ++r;
      break;
    default:
      break;
  }
  if (r < 0 || r >= kRows || c < 0 || c >= width_) return;  // wall
  row_ = r;
  col_ = c;
  if (is_cliff(row_, col_)) {
    set_outcome(Outcome::kLoss);
    return;
  }
  if (col_ > best_col_) {
    add_score(col_ - best_col_);
    best_col_ = col_;
  }
  if (row_ == 1 && col_ == width_ - 1) set_outcome(Outcome::kWin);
}

bool CliffWalk::payload_equals(const Game& other) const {
  const auto& o = static_cast<const CliffWalk&>(other);
  return width_ == o.width_ && row_ == o.row_ && col_ == o.col_ &&
         best_col_ == o.best_col_;
}

// --- StochasticChase ---------------------------------------------------------

StochasticChase::StochasticChase(int size, std::vector<Cell> npcs,
                                 int max_ticks)
    : Game(max_ticks), size_(size), npcs_(std::move(npcs)) {
  RHSEED_CHECK(size >= 2, "chase grid must be at least 2x2");
  RHSEED_CHECK(!npcs_.empty(), "chase needs at least one npc");
  for (const Cell& n : npcs_) {
    RHSEED_CHECK(n.x >= 0 && n.x < size && n.y >= 0 && n.y < size,
                 "npc outside the grid");
    RHSEED_CHECK(!(n == avatar_), "npc placed on the avatar");
  }
}

std::unique_ptr<Game> StochasticChase::clone() const {
  return std::make_unique<StochasticChase>(*this);
}

std::string StochasticChase::to_string() const {
  std::ostringstream out;
  for (int y = 0; y < size_; ++y) {
    for (int x = 0; x < size_; ++x) {
      Cell c{x, y};
      if (c == avatar_) {
        out << 'A';
      } else if (std::find(npcs_.begin(), npcs_.end(), c) != npcs_.end()) {
        out << 'n';
      } else {
        out << '.';
      }
    }
    out << '\n';
  }
  out << "score=" << score() << " tick=" << tick();
  return out.str();
}

StochasticChase::Cell StochasticChase::step(Cell from, int direction) const {
  Cell to = from;
  switch (direction) {
    case kLeft:
      --to.x;
      break;
    case kRight:
      ++to.x;
      break;
    case kUp:
      --to.y;
      break;
    case kDown:
      ++to.y;
      break;
    default:
      break;
  }
  if (to.x < 0 || to.x >= size_ || to.y < 0 || to.y >= size_) return from;
  return to;
}

void StochasticChase::capture() {
  auto caught = std::remove(npcs_.begin(), npcs_.end(), avatar_);
  const auto n = std::distance(caught, npcs_.end());
  if (n > 0) {
    npcs_.erase(caught, npcs_.end());
    add_score(static_cast<double>(n));
  }
}

void StochasticChase::apply(ActionId action, Rng& rng) {
  avatar_ = step(avatar_, action.index);
  capture();
  for (Cell& npc : npcs_) {
    const double coin = rng.uniform01();
    const int wander = rng.uniform_int(5);
    if (coin < kFleeProbability) {
      int best_dist = -1;
      Cell best = npc;
      for (int d = 0; d < 5; ++d) {
        Cell c = step(npc, d);
        int dist = std::abs(c.x - avatar_.x) + std::abs(c.y - avatar_.y);
        if (dist > best_dist) {
          best_dist = dist;
          best = c;
        }
      }
      npc = best;
    } else {
      npc = step(npc, wander);
    }
  }
  capture();
  if (npcs_.empty()) set_outcome(Outcome::kWin);
}

bool StochasticChase::payload_equals(const Game& other) const {
  const auto& o = static_cast<const StochasticChase&>(other);
  return size_ == o.size_ && avatar_ == o.avatar_ && npcs_ == o.npcs_;
}

// --- Bandit ------------------------------------------------------------------

Bandit::Bandit(int good_arm, int max_ticks)
    : Game(max_ticks), good_arm_(good_arm) {
  RHSEED_CHECK(good_arm == 0 || good_arm == 1, "good arm must be 0 or 1");
}

std::unique_ptr<Game> Bandit::clone() const {
  return std::make_unique<Bandit>(*this);
}

std::string Bandit::to_string() const {
  std::ostringstream out;
  out << "bandit good_arm=" << good_arm_ << " score=" << score()
      << " tick=" << tick();
  return out.str();
}

void Bandit::apply(ActionId action, Rng& rng) {
  if (rng.bernoulli(arm_mean(action.index))) add_score(1.0);
  // The win check runs before Game::advance increments the tick, so the last
  // pull is the one at tick max_ticks - 1.
  if (tick() + 1 == max_ticks() && score() >= kWinFraction * max_ticks()) {
    set_outcome(Outcome::kWin);
  }
}

bool Bandit::payload_equals(const Game& other) const {
  return good_arm_ == static_cast<const Bandit&>(other).good_arm_;
}

// --- Construction ------------------------------------------------------------

const std::vector<std::string>& game_names() {
  static const std::vector<std::string> names = {
      "corridor", "trapcorridor", "cliffwalk", "stochasticchase", "bandit"};
  return names;
}

bool is_known_game(std::string_view name) {
  const auto& names = game_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

GameSpec GameSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("game spec must look like name:level, got '" +
                                std::string(text) + "'");
  }
  std::string_view name = text.substr(0, colon);
  std::string_view level_text = text.substr(colon + 1);
  int level = -1;
  auto [ptr, ec] = std::from_chars(level_text.data(),
                                   level_text.data() + level_text.size(),
                                   level);
  if (ec != std::errc() || ptr != level_text.data() + level_text.size()) {
    throw std::invalid_argument("bad level in game spec '" +
                                std::string(text) + "'");
  }
  if (!is_known_game(name)) {
    throw std::invalid_argument("unknown game '" + std::string(name) + "'");
  }
  if (level < 0 || level >= kNumLevels) {
    throw std::invalid_argument("level must be in [0, 4], got " +
                                std::to_string(level));
  }
  GameSpec spec;
  spec.name = std::string(name);
  spec.level = level;
  spec.stochastic = name == "stochasticchase" || name == "bandit";
  return spec;
}

std::string GameSpec::to_string() const {
  return name + ":" + std::to_string(level);
}

GameState make_initial_state(std::string_view name, int level) {
  if (level < 0 || level >= kNumLevels) {
    throw std::invalid_argument("level must be in [0, 4], got " +
                                std::to_string(level));
  }
  if (name == "corridor") {
    return GameState(std::make_unique<Corridor>(3 + 2 * level));
  }
  if (name == "trapcorridor") {
    return GameState(std::make_unique<TrapCorridor>(2 + level));
  }
  if (name == "cliffwalk") {
    return GameState(std::make_unique<CliffWalk>(4 + 2 * level));
  }
  if (name == "stochasticchase") {
    const int size = 5 + level;
    const int far = size - 1;
    std::vector<StochasticChase::Cell> corners = {
        {far, far}, {far, 0}, {0, far}};
    // Rotate which corner comes first so levels differ beyond size.
    std::rotate(corners.begin(), corners.begin() + level % 3, corners.end());
    corners.resize(1 + level / 2);
    return GameState(std::make_unique<StochasticChase>(size, corners));
  }
  if (name == "bandit") {
    return GameState(std::make_unique<Bandit>(level % 2));
  }
  throw std::invalid_argument("unknown game '" + std::string(name) + "'");
}

GameState make_initial_state(const GameSpec& spec) {
  return make_initial_state(spec.name, spec.level);
}

}  // namespace rhseed
