// Copyright 2026 The cumlift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Importers for the PSPLIB single-mode (.sm), ProGen/max (.sch) and
// Patterson (.rcp) benchmark formats.

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "cumlift/errors.hpp"
#include "cumlift/instance.hpp"

namespace cumlift {

SchedulingInstance ParseCanonicalJson(std::string_view text);

namespace {

struct Token {
  std::string_view text;
  int line;
};

struct Line {
  int number = 0;
  std::string_view text;
  std::vector<std::string_view> tokens;
};

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

std::vector<std::string_view> Split(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpace(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !IsSpace(text[i])) ++i;
    if (i > start) out.push_back(text.substr(start, i - start));
  }
  return out;
}

// Non-blank lines with their 1-based numbers.
std::vector<Line> SplitLines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++number;
    std::string_view line = text.substr(pos, end - pos);
    auto tokens = Split(line);
    if (!tokens.empty()) lines.push_back(Line{number, line, std::move(tokens)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

Value ToValue(std::string_view token, int line) {
  Value value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw MalformedInput("expected an integer, found '" + std::string(token) + "'", line);
  }
  return value;
}

Value ToNonNegative(std::string_view token, int line, const char* what) {
  const Value value = ToValue(token, line);
  if (value < 0) throw NegativeValue(std::string(what) + " must be nonnegative, found " + std::to_string(value), line);
  return value;
}

bool StartsWith(std::string_view text, std::string_view prefix) {
  return text.substr(0, prefix.size()) == prefix;
}

std::string_view Trim(std::string_view text) {
  while (!text.empty() && IsSpace(text.front())) text.remove_prefix(1);
  while (!text.empty() && IsSpace(text.back())) text.remove_suffix(1);
  return text;
}

bool IsSeparator(const Line& line) {
  const auto t = Trim(line.text);
  return !t.empty() && (t.front() == '*' || t.front() == '-') && t.find_first_not_of("*-") == std::string_view::npos;
}

// Value after the first ':' on a header line such as "horizon : 158".
Value HeaderValue(const Line& line) {
  const auto colon = line.text.find(':');
  if (colon == std::string_view::npos) throw MalformedInput("expected 'key : value'", line.number);
  const auto tokens = Split(line.text.substr(colon + 1));
  if (tokens.empty()) throw MalformedInput("missing value after ':'", line.number);
  return ToNonNegative(tokens.front(), line.number, "header value");
}

int FindSection(const std::vector<Line>& lines, std::initializer_list<std::string_view> names) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto t = Trim(lines[i].text);
    for (auto name : names) {
      if (StartsWith(t, name)) return static_cast<int>(i);
    }
  }
  return -1;
}

void Warn(std::vector<std::string>* warnings, std::string message) {
  if (warnings != nullptr) warnings->push_back(std::move(message));
}

SchedulingInstance ParsePsplibSm(std::string_view text, std::vector<std::string>* warnings) {
  const auto lines = SplitLines(text);
  std::optional<Value> declared_jobs;
  std::optional<Value> horizon;
  Value renewable = -1;
  Value other_resources = 0;
  for (const Line& line : lines) {
    const auto t = Trim(line.text);
    if (StartsWith(t, "jobs")) {
      declared_jobs = HeaderValue(line);
    } else if (StartsWith(t, "horizon")) {
      horizon = HeaderValue(line);
    } else if (StartsWith(t, "- renewable")) {
      renewable = HeaderValue(line);
    } else if (StartsWith(t, "- nonrenewable") || StartsWith(t, "- doubly constrained")) {
      other_resources += HeaderValue(line);
    }
  }
  if (!declared_jobs) throw MalformedInput("missing 'jobs (incl. supersource/sink )' header");
  if (renewable < 0) throw MalformedInput("missing '- renewable' header");
  if (other_resources > 0) {
    Warn(warnings, "ignoring " + std::to_string(other_resources) + " non-renewable/doubly constrained resources");
  }

  const int prec = FindSection(lines, {"PRECEDENCE RELATIONS"});
  const int req = FindSection(lines, {"REQUESTS/DURATIONS"});
  const int avail = FindSection(lines, {"RESOURCEAVAILABILITIES", "RESOURCE AVAILABILITIES"});
  if (prec < 0) throw MalformedInput("missing PRECEDENCE RELATIONS section");
  if (req < 0) throw MalformedInput("missing REQUESTS/DURATIONS section");
  if (avail < 0) throw MalformedInput("missing RESOURCEAVAILABILITIES section");

  // Data lines of a section: everything after the header up to the next
  // '*' separator, skipping column captions and '-' rules.
  auto section_rows = [&](int header) {
    std::vector<const Line*> rows;
    for (std::size_t i = header + 1; i < lines.size(); ++i) {
      const Line& line = lines[i];
      if (IsSeparator(line) && Trim(line.text).front() == '*') break;
      if (IsSeparator(line) || StartsWith(Trim(line.text), "jobnr")) continue;
      rows.push_back(&line);
    }
    return rows;
  };

  const auto jobs = static_cast<int>(*declared_jobs);
  const auto k = static_cast<int>(renewable);
  const int all_resources = k + static_cast<int>(other_resources);

  SchedulingInstance instance;
  instance.kind = InstanceKind::kRcpsp;
  instance.horizon = horizon;
  instance.tasks.resize(jobs);

  const auto prec_rows = section_rows(prec);
  if (static_cast<int>(prec_rows.size()) != jobs) {
    throw InconsistentCounts("declared " + std::to_string(jobs) + " jobs but PRECEDENCE RELATIONS lists " +
                             std::to_string(prec_rows.size()),
                             prec_rows.empty() ? lines[prec].number : prec_rows.back()->number);
  }
  std::vector<std::vector<TaskId>> successors(jobs);
  for (int j = 0; j < jobs; ++j) {
    const Line& line = *prec_rows[j];
    if (line.tokens.size() < 3) throw MalformedInput("precedence line needs jobnr, #modes, #successors", line.number);
    if (ToValue(line.tokens[0], line.number) != j + 1) {
      throw MalformedInput("expected job " + std::to_string(j + 1), line.number);
    }
    if (ToValue(line.tokens[1], line.number) != 1) {
      throw MalformedInput("multi-mode jobs are not supported", line.number);
    }
    const Value count = ToNonNegative(line.tokens[2], line.number, "successor count");
    if (static_cast<Value>(line.tokens.size()) != 3 + count) {
      throw InconsistentCounts("declared " + std::to_string(count) + " successors, found " +
                               std::to_string(line.tokens.size() - 3),
                               line.number);
    }
    for (Value s = 0; s < count; ++s) {
      const Value succ = ToValue(line.tokens[3 + s], line.number);
      if (succ < 1 || succ > jobs) throw MalformedInput("successor " + std::to_string(succ) + " out of range", line.number);
      successors[j].push_back(static_cast<TaskId>(succ - 1));
    }
  }

  const auto req_rows = section_rows(req);
  if (static_cast<int>(req_rows.size()) != jobs) {
    throw InconsistentCounts("declared " + std::to_string(jobs) + " jobs but REQUESTS/DURATIONS lists " +
                             std::to_string(req_rows.size()),
                             req_rows.empty() ? lines[req].number : req_rows.back()->number);
  }
  for (int j = 0; j < jobs; ++j) {
    const Line& line = *req_rows[j];
    if (static_cast<int>(line.tokens.size()) != 3 + all_resources) {
      throw InconsistentCounts("expected jobnr, mode, duration and " + std::to_string(all_resources) +
                               " requests, found " + std::to_string(line.tokens.size()) + " fields",
                               line.number);
    }
    if (ToValue(line.tokens[0], line.number) != j + 1) {
      throw MalformedInput("expected job " + std::to_string(j + 1), line.number);
    }
    Task& task = instance.tasks[j];
    task.duration = ToNonNegative(line.tokens[2], line.number, "duration");
    for (int r = 0; r < k; ++r) task.demands.push_back(ToNonNegative(line.tokens[3 + r], line.number, "demand"));
  }

  std::vector<const Line*> avail_rows;
  for (std::size_t i = avail + 1; i < lines.size(); ++i) {
    if (IsSeparator(lines[i])) {
      if (!avail_rows.empty()) {
        for (std::size_t rest = i + 1; rest < lines.size(); ++rest) {
          if (!IsSeparator(lines[rest])) {
            Warn(warnings, "line " + std::to_string(lines[rest].number) + ": ignoring trailing content '" +
                               std::string(Trim(lines[rest].text)) + "'");
            break;
          }
        }
        break;
      }
      continue;
    }
    avail_rows.push_back(&lines[i]);
  }
  // Caption line ("R 1  R 2 ...") followed by the capacities.
  if (avail_rows.size() < 2) throw MalformedInput("RESOURCEAVAILABILITIES needs a caption and a value line", lines[avail].number);
  const Line& caps = *avail_rows[1];
  if (static_cast<int>(caps.tokens.size()) != all_resources) {
    throw InconsistentCounts("declared " + std::to_string(all_resources) + " resources, found " +
                             std::to_string(caps.tokens.size()) + " availabilities",
                             caps.number);
  }
  for (int r = 0; r < k; ++r) {
    instance.resources.push_back(Resource{ToNonNegative(caps.tokens[r], caps.number, "capacity")});
  }
  for (std::size_t extra = 2; extra < avail_rows.size(); ++extra) {
    Warn(warnings, "line " + std::to_string(avail_rows[extra]->number) + ": ignoring trailing content '" +
                       std::string(Trim(avail_rows[extra]->text)) + "'");
  }

  for (int j = 0; j < jobs; ++j) {
    for (TaskId s : successors[j]) instance.precedences.push_back({j, s, instance.tasks[j].duration});
  }
  Validate(instance);
  return instance;
}

// Whitespace token stream over the whole text, remembering line numbers.
class TokenStream {
 public:
  explicit TokenStream(std::string_view text) {
    for (const Line& line : SplitLines(text)) {
      for (auto t : line.tokens) tokens_.push_back(Token{t, line.number});
    }
  }
  bool done() const { return pos_ >= tokens_.size(); }
  std::size_t remaining() const { return tokens_.size() - pos_; }
  const Token& next(const char* what) {
    if (done()) {
      throw InconsistentCounts(std::string("unexpected end of input while reading ") + what,
                               tokens_.empty() ? 0 : tokens_.back().line);
    }
    return tokens_[pos_++];
  }
  int line() const { return done() ? (tokens_.empty() ? 0 : tokens_.back().line) : tokens_[pos_].line; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

SchedulingInstance ParsePattersonRcp(std::string_view text, std::vector<std::string>* warnings) {
  TokenStream in(text);
  auto nonneg = [&](const char* what) {
    const Token& t = in.next(what);
    return ToNonNegative(t.text, t.line, what);
  };
  const auto n = static_cast<int>(nonneg("activity count"));
  const auto k = static_cast<int>(nonneg("resource count"));
  SchedulingInstance instance;
  instance.kind = InstanceKind::kRcpsp;
  for (int r = 0; r < k; ++r) instance.resources.push_back(Resource{nonneg("capacity")});
  instance.tasks.resize(n);
  std::vector<std::pair<TaskId, TaskId>> arcs;
  for (int j = 0; j < n; ++j) {
    Task& task = instance.tasks[j];
    task.duration = nonneg("duration");
    for (int r = 0; r < k; ++r) task.demands.push_back(nonneg("demand"));
    const Value count = nonneg("successor count");
    for (Value s = 0; s < count; ++s) {
      const Token& t = in.next("successor");
      const Value succ = ToValue(t.text, t.line);
      if (succ < 1 || succ > n) throw MalformedInput("successor " + std::to_string(succ) + " out of range", t.line);
      arcs.emplace_back(j, static_cast<TaskId>(succ - 1));
    }
  }
  if (!in.done()) {
    Warn(warnings, "line " + std::to_string(in.line()) + ": ignoring " + std::to_string(in.remaining()) +
                       " trailing tokens");
  }
  for (auto [from, to] : arcs) instance.precedences.push_back({from, to, instance.tasks[from].duration});
  Validate(instance);
  return instance;
}

SchedulingInstance ParseProgenMaxSch(std::string_view text, std::vector<std::string>* warnings) {
  const auto lines = SplitLines(text);
  if (lines.empty()) throw MalformedInput("empty input");
  const Line& head = lines[0];
  if (head.tokens.size() < 2) throw MalformedInput("header needs the activity and resource counts", head.number);
  const Value real = ToNonNegative(head.tokens[0], head.number, "activity count");
  const Value k = ToNonNegative(head.tokens[1], head.number, "resource count");
  const auto n = static_cast<int>(real + 2);
  const std::size_t needed = 1 + 2 * static_cast<std::size_t>(n) + (k > 0 ? 1 : 0);
  if (lines.size() < needed) {
    throw InconsistentCounts("declared " + std::to_string(real) + " activities (plus source and sink) but the file has only " +
                             std::to_string(lines.size()) + " data lines",
                             lines.back().number);
  }

  SchedulingInstance instance;
  instance.kind = InstanceKind::kRcpspMax;
  instance.tasks.resize(n);

  for (int j = 0; j < n; ++j) {
    const Line& line = lines[1 + j];
    if (line.tokens.size() < 3) throw MalformedInput("successor line needs id, mode, #successors", line.number);
    if (ToValue(line.tokens[0], line.number) != j) throw MalformedInput("expected activity " + std::to_string(j), line.number);
    const Value count = ToNonNegative(line.tokens[2], line.number, "successor count");
    if (static_cast<Value>(line.tokens.size()) != 3 + 2 * count) {
      throw InconsistentCounts("declared " + std::to_string(count) + " successors with lags, found " +
                               std::to_string(line.tokens.size() - 3) + " fields",
                               line.number);
    }
    for (Value s = 0; s < count; ++s) {
      const Value succ = ToValue(line.tokens[3 + s], line.number);
      if (succ < 0 || succ >= n) throw MalformedInput("successor " + std::to_string(succ) + " out of range", line.number);
      std::string_view lag = line.tokens[3 + count + s];
      if (lag.size() < 2 || lag.front() != '[' || lag.back() != ']') {
        throw MalformedInput("expected a bracketed time lag, found '" + std::string(lag) + "'", line.number);
      }
      instance.precedences.push_back(
          {static_cast<TaskId>(j), static_cast<TaskId>(succ), ToValue(lag.substr(1, lag.size() - 2), line.number)});
    }
  }
  for (int j = 0; j < n; ++j) {
    const Line& line = lines[1 + n + j];
    if (static_cast<Value>(line.tokens.size()) != 3 + k) {
      throw InconsistentCounts("expected id, mode, duration and " + std::to_string(k) + " demands, found " +
                               std::to_string(line.tokens.size()) + " fields",
                               line.number);
    }
    if (ToValue(line.tokens[0], line.number) != j) throw MalformedInput("expected activity " + std::to_string(j), line.number);
    Task& task = instance.tasks[j];
    task.duration = ToNonNegative(line.tokens[2], line.number, "duration");
    for (Value r = 0; r < k; ++r) task.demands.push_back(ToNonNegative(line.tokens[3 + r], line.number, "demand"));
  }
  if (k > 0) {
    const Line& caps = lines[1 + 2 * n];
    if (static_cast<Value>(caps.tokens.size()) != k) {
      throw InconsistentCounts("declared " + std::to_string(k) + " resources, found " +
                               std::to_string(caps.tokens.size()) + " capacities",
                               caps.number);
    }
    for (auto t : caps.tokens) instance.resources.push_back(Resource{ToNonNegative(t, caps.number, "capacity")});
  }
  for (std::size_t extra = needed; extra < lines.size(); ++extra) {
    Warn(warnings, "line " + std::to_string(lines[extra].number) + ": ignoring trailing content");
  }
  Validate(instance);
  return instance;
}

}  // namespace

SchedulingInstance ParseInstance(std::string_view text, InstanceFormat format, std::vector<std::string>* warnings) {
  switch (format) {
    case InstanceFormat::kPsplibSm:
      return ParsePsplibSm(text, warnings);
    case InstanceFormat::kProgenMaxSch:
      return ParseProgenMaxSch(text, warnings);
    case InstanceFormat::kPattersonRcp:
      return ParsePattersonRcp(text, warnings);
    case InstanceFormat::kCanonicalJson:
      return ParseCanonicalJson(text);
  }
  throw std::invalid_argument("unknown instance format");
}

}  // namespace cumlift
