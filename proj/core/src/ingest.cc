// Copyright 2026 The moometrics Authors.
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

#include "moometrics/ingest.h"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>

#include "moometrics/checklist.h"
#include "moometrics/errors.h"

namespace moometrics {
namespace {

struct Field {
  std::string text;
  bool quoted = false;
};

struct Line {
  int number = 0;
  std::vector<Field> fields;
};

[[noreturn]] void Throw(const std::string& path, int line,
                        IngestErrorKind kind, const std::string& message) {
  throw IngestError(path, line, kind, message);
}

std::vector<Field> SplitFields(std::string_view text, const std::string& path,
                               int line) {
  std::vector<Field> fields;
  std::size_t i = 0;
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v';
  };
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    Field field;
    if (text[i] == '"') {
      field.quoted = true;
      ++i;
      bool closed = false;
      while (i < text.size()) {
        char c = text[i++];
        if (c == '"') {
          closed = true;
          break;
        }
        if (c == '\\') {
          if (i >= text.size()) break;
          char escaped = text[i++];
          if (escaped == 'n') {
            field.text.push_back('\n');
          } else if (escaped == '"' || escaped == '\\') {
            field.text.push_back(escaped);
          } else {
            Throw(path, line, IngestErrorKind::kFormat,
                  std::string("unknown escape \\") + escaped);
          }
          continue;
        }
        field.text.push_back(c);
      }
      if (!closed) {
        Throw(path, line, IngestErrorKind::kFormat, "unterminated string");
      }
    } else {
      while (i < text.size() && !is_space(text[i]) && text[i] != '"') {
        field.text.push_back(text[i++]);
      }
    }
    fields.push_back(std::move(field));
  }
  return fields;
}

// Non-empty, non-comment lines split into fields.
std::vector<Line> SplitLines(std::string_view text, const std::string& path) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view content = text.substr(start, end - start);
    start = end + 1;
    std::size_t first = content.find_first_not_of(" \t\r\f\v");
    if (first == std::string_view::npos || content[first] == '#') continue;
    lines.push_back(Line{number, SplitFields(content, path, number)});
  }
  return lines;
}

void ExpectArity(const Line& line, std::size_t arity, const std::string& path,
                 std::string_view usage) {
  if (line.fields.size() != arity) {
    Throw(path, line.number, IngestErrorKind::kFormat,
          "malformed line, expected: " + std::string(usage));
  }
}

// Bare (unquoted) token at `index`.
const std::string& Token(const Line& line, std::size_t index,
                         const std::string& path, std::string_view what) {
  const Field& field = line.fields[index];
  if (field.quoted || field.text.empty()) {
    Throw(path, line.number, IngestErrorKind::kFormat,
          "expected " + std::string(what) + " as a bare word");
  }
  return field.text;
}

std::set<std::string> ServiceList(const Line& line, const std::string& path) {
  std::string joined;
  for (std::size_t i = 3; i < line.fields.size(); ++i) {
    joined += Token(line, i, path, "service name");
  }
  std::set<std::string> services;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = joined.find(',', start);
    std::string item = joined.substr(start, comma - start);
    if (item.empty()) {
      Throw(path, line.number, IngestErrorKind::kFormat,
            "empty service name in list");
    }
    services.insert(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return services;
}

std::string Quote(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') {
      out.push_back('\\');
      out.push_back(c);
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

std::string Join(const std::set<std::string>& items) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += ",";
    out += item;
  }
  return out;
}

}  // namespace

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw FileError("cannot read " + path);
  return buffer.str();
}

RequirementSet ParseRequirements(std::string_view text,
                                 const std::string& path) {
  const std::vector<Line> lines = SplitLines(text, path);
  RequirementSet reqs;
  std::map<std::string, std::size_t> index;

  // Declarations first so references may appear in any order.
  for (const Line& line : lines) {
    const std::string& keyword = Token(line, 0, path, "keyword");
    if (keyword == "reviewer") {
      ExpectArity(line, 2, path, "reviewer <id>");
      const std::string& id = Token(line, 1, path, "reviewer id");
      if (!reqs.reviewers.insert(id).second) {
        Throw(path, line.number, IngestErrorKind::kDuplicate,
              "duplicate reviewer " + id);
      }
    } else if (keyword == "req") {
      ExpectArity(line, 4, path, "req <id> \"<text>\" <valid|notyetvalid>");
      const std::string& id = Token(line, 1, path, "requirement id");
      if (!line.fields[2].quoted) {
        Throw(path, line.number, IngestErrorKind::kFormat,
              "requirement text must be quoted");
      }
      const std::string& status = Token(line, 3, path, "validity");
      Requirement req;
      req.id = id;
      req.text = line.fields[2].text;
      if (status == "valid") {
        req.validity = Validity::kValid;
      } else if (status == "notyetvalid") {
        req.validity = Validity::kNotYetValid;
      } else {
        Throw(path, line.number, IngestErrorKind::kFormat,
              "validity must be valid or notyetvalid, got " + status);
      }
      if (!index.emplace(id, reqs.requirements.size()).second) {
        Throw(path, line.number, IngestErrorKind::kDuplicate,
              "duplicate requirement id " + id);
      }
      reqs.requirements.push_back(std::move(req));
    } else if (keyword != "verdict" && keyword != "change" &&
               keyword != "entity") {
      Throw(path, line.number, IngestErrorKind::kFormat,
            "unknown keyword " + keyword);
    }
  }

  auto find_req = [&](const Line& line, const std::string& id) -> Requirement& {
    auto it = index.find(id);
    if (it == index.end()) {
      Throw(path, line.number, IngestErrorKind::kReference,
            "unknown requirement " + id);
    }
    return reqs.requirements[it->second];
  };

  std::map<std::string, int> provides_line;
  std::set<std::string> provided;
  for (const Line& line : lines) {
    const std::string& keyword = line.fields[0].text;
    if (keyword == "verdict") {
      ExpectArity(line, 4, path, "verdict <req-id> <reviewer-id> \"<label>\"");
      Requirement& req = find_req(line, Token(line, 1, path, "requirement id"));
      const std::string& reviewer = Token(line, 2, path, "reviewer id");
      if (!line.fields[3].quoted) {
        Throw(path, line.number, IngestErrorKind::kFormat,
              "verdict label must be quoted");
      }
      if (!reqs.reviewers.contains(reviewer)) {
        Throw(path, line.number, IngestErrorKind::kReference,
              "verdict names undeclared reviewer " + reviewer);
      }
      if (!req.reviewer_verdicts.emplace(reviewer, line.fields[3].text)
               .second) {
        Throw(path, line.number, IngestErrorKind::kDuplicate,
              "duplicate verdict by " + reviewer + " on " + req.id);
      }
    } else if (keyword == "change") {
      ExpectArity(line, 4, path, "change <req-id> <seq> <reason>");
      Requirement& req = find_req(line, Token(line, 1, path, "requirement id"));
      const std::string& seq_text = Token(line, 2, path, "sequence number");
      std::int64_t seq = 0;
      auto [ptr, ec] = std::from_chars(
          seq_text.data(), seq_text.data() + seq_text.size(), seq);
      if (ec != std::errc() || ptr != seq_text.data() + seq_text.size()) {
        Throw(path, line.number, IngestErrorKind::kFormat,
              "sequence number must be an integer, got " + seq_text);
      }
      auto reason = ParseChangeReason(Token(line, 3, path, "change reason"));
      if (!reason) {
        Throw(path, line.number, IngestErrorKind::kFormat,
              "change reason must be one of "
              "business|clarification|error|scope|other");
      }
      if (!req.changes.empty() && seq <= req.changes.back().sequence) {
        Throw(path, line.number, IngestErrorKind::kFormat,
              "change sequence for " + req.id + " must increase (" +
                  std::to_string(seq) + " after " +
                  std::to_string(req.changes.back().sequence) + ")");
      }
      req.changes.push_back(RequirementChange{seq, *reason});
    } else if (keyword == "entity") {
      if (line.fields.size() < 4) {
        Throw(path, line.number, IngestErrorKind::kFormat,
              "malformed line, expected: entity <name> requires|provides "
              "<svc>[,<svc>...]");
      }
      const std::string& name = Token(line, 1, path, "entity name");
      const std::string& verb = Token(line, 2, path, "requires|provides");
      std::set<std::string> services = ServiceList(line, path);
      EntityChecklist& checklist = reqs.entity_checklists[name];
      if (verb == "requires") {
        if (!checklist.required_services.empty()) {
          Throw(path, line.number, IngestErrorKind::kDuplicate,
                "duplicate requires list for entity " + name);
        }
        checklist.required_services = std::move(services);
      } else if (verb == "provides") {
        if (!provided.insert(name).second) {
          Throw(path, line.number, IngestErrorKind::kDuplicate,
                "duplicate provides list for entity " + name);
        }
        provides_line[name] = line.number;
        checklist.provided_services = std::move(services);
      } else {
        Throw(path, line.number, IngestErrorKind::kFormat,
              "expected requires or provides, got " + verb);
      }
    }
  }
  for (const auto& [name, checklist] : reqs.entity_checklists) {
    if (checklist.required_services.empty()) {
      Throw(path, provides_line[name], IngestErrorKind::kReference,
            "entity " + name + " provides services but has no requires list");
    }
  }
  return reqs;
}

RequirementSet ReadRequirements(const std::string& path) {
  return ParseRequirements(ReadFile(path), path);
}

std::string WriteRequirements(const RequirementSet& reqs) {
  std::ostringstream out;
  for (const auto& reviewer : reqs.reviewers) {
    out << "reviewer " << reviewer << "\n";
  }
  for (const auto& req : reqs.requirements) {
    out << "req " << req.id << " " << Quote(req.text) << " "
        << (req.validity == Validity::kValid ? "valid" : "notyetvalid")
        << "\n";
    for (const auto& [reviewer, label] : req.reviewer_verdicts) {
      out << "verdict " << req.id << " " << reviewer << " " << Quote(label)
          << "\n";
    }
    for (const auto& change : req.changes) {
      out << "change " << req.id << " " << change.sequence << " "
          << ToString(change.reason) << "\n";
    }
  }
  for (const auto& [name, checklist] : reqs.entity_checklists) {
    out << "entity " << name << " requires "
        << Join(checklist.required_services) << "\n";
    if (!checklist.provided_services.empty()) {
      out << "entity " << name << " provides "
          << Join(checklist.provided_services) << "\n";
    }
  }
  return out.str();
}

UseCaseModel ParseUseCases(std::string_view text, const std::string& path) {
  const std::vector<Line> lines = SplitLines(text, path);
  UseCaseModel model;
  std::map<std::string, std::size_t> index;

  for (const Line& line : lines) {
    const std::string& keyword = Token(line, 0, path, "keyword");
    if (keyword == "actor") {
      ExpectArity(line, 2, path, "actor <name>");
      const std::string& name = Token(line, 1, path, "actor name");
      if (!model.actors.insert(name).second) {
        Throw(path, line.number, IngestErrorKind::kDuplicate,
              "duplicate actor " + name);
      }
    } else if (keyword == "usecase") {
      ExpectArity(line, 2, path, "usecase <name>");
      const std::string& name = Token(line, 1, path, "use case name");
      if (!index.emplace(name, model.use_cases.size()).second) {
        Throw(path, line.number, IngestErrorKind::kDuplicate,
              "duplicate use case " + name);
      }
      model.use_cases.push_back(UseCase{name, {}, {}, {}});
    } else if (keyword != "uses" && keyword != "message" &&
               keyword != "class") {
      Throw(path, line.number, IngestErrorKind::kFormat,
            "unknown keyword " + keyword);
    }
  }

  for (const Line& line : lines) {
    const std::string& keyword = line.fields[0].text;
    if (keyword == "actor" || keyword == "usecase") continue;
    ExpectArity(line, 3, path, keyword + " <usecase> <name>");
    const std::string& use_case_name = Token(line, 1, path, "use case name");
    auto it = index.find(use_case_name);
    if (it == index.end()) {
      Throw(path, line.number, IngestErrorKind::kReference,
            "unknown use case " + use_case_name);
    }
    UseCase& use_case = model.use_cases[it->second];
    const std::string& name = Token(line, 2, path, "name");
    if (keyword == "uses") {
      if (!model.actors.contains(name)) {
        Throw(path, line.number, IngestErrorKind::kReference,
              "use case " + use_case_name + " references undeclared actor " +
                  name);
      }
      use_case.associated_actors.insert(name);
    } else if (keyword == "message") {
      use_case.messages.push_back(name);
    } else {
      use_case.system_classes.insert(name);
    }
  }
  return model;
}

UseCaseModel ReadUseCases(const std::string& path) {
  return ParseUseCases(ReadFile(path), path);
}

std::string WriteUseCases(const UseCaseModel& model) {
  std::ostringstream out;
  for (const auto& actor : model.actors) out << "actor " << actor << "\n";
  for (const auto& use_case : model.use_cases) {
    out << "usecase " << use_case.name << "\n";
  }
  for (const auto& use_case : model.use_cases) {
    for (const auto& actor : use_case.associated_actors) {
      out << "uses " << use_case.name << " " << actor << "\n";
    }
    for (const auto& message : use_case.messages) {
      out << "message " << use_case.name << " " << message << "\n";
    }
    for (const auto& cls : use_case.system_classes) {
      out << "class " << use_case.name << " " << cls << "\n";
    }
  }
  return out.str();
}

CoverageTrace ParseTrace(std::string_view text, const std::string& path) {
  CoverageTrace trace;
  trace.path = path;
  trace.run_id = std::filesystem::path(path).stem().string();
  for (const Line& line : SplitLines(text, path)) {
    const std::string& tag = Token(line, 0, path, "event tag");
    TraceEvent event;
    event.line = line.number;
    if (tag == "M") {
      ExpectArity(line, 2, path, "M <pkg.Class.method>");
      event.event = MethodEntryEvent{Token(line, 1, path, "method id")};
    } else if (tag == "S") {
      ExpectArity(line, 2, path, "S <point-id>");
      event.event = PointEvent{Token(line, 1, path, "point id")};
    } else if (tag == "B") {
      ExpectArity(line, 3, path, "B <branch-id> <taken|not_taken>");
      const std::string& arm = Token(line, 2, path, "branch arm");
      BranchArm value;
      if (arm == "taken") {
        value = BranchArm::kTaken;
      } else if (arm == "not_taken") {
        value = BranchArm::kNotTaken;
      } else {
        Throw(path, line.number, IngestErrorKind::kFormat,
              "branch arm must be taken or not_taken, got " + arm);
      }
      event.event = BranchArmEvent{Token(line, 1, path, "branch id"), value};
    } else {
      Throw(path, line.number, IngestErrorKind::kFormat,
            "unknown event tag " + tag + " (expected M, S, or B)");
    }
    trace.events.push_back(std::move(event));
  }
  return trace;
}

CoverageTrace ReadTrace(const std::string& path) {
  return ParseTrace(ReadFile(path), path);
}

std::map<std::string, bool> ParseChecklistFacts(std::string_view text,
                                                const std::string& path) {
  std::map<std::string, bool> facts;
  int number = 0;
  std::size_t start = 0;
  auto trim = [](std::string_view s) {
    std::size_t first = s.find_first_not_of(" \t\r\f\v");
    if (first == std::string_view::npos) return std::string_view();
    std::size_t last = s.find_last_not_of(" \t\r\f\v");
    return s.substr(first, last - first + 1);
  };
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view content = trim(text.substr(start, end - start));
    start = end + 1;
    if (content.empty() || content.front() == '#') continue;

    std::size_t eq = content.find('=');
    if (eq == std::string_view::npos) {
      Throw(path, number, IngestErrorKind::kFormat,
            "malformed line, expected: <check-id> = <true|false>");
    }
    std::string id(trim(content.substr(0, eq)));
    std::string_view value = trim(content.substr(eq + 1));
    if (id.empty() || id.find_first_of(" \t") != std::string::npos) {
      Throw(path, number, IngestErrorKind::kFormat, "malformed check id");
    }
    if (value != "true" && value != "false") {
      Throw(path, number, IngestErrorKind::kFormat,
            "value must be true or false");
    }
    const CheckDefinition* check = FindCheck(id);
    if (check == nullptr) {
      Throw(path, number, IngestErrorKind::kReference,
            "unknown check id " + id);
    }
    if (check->source == CheckSource::kDerived) {
      Throw(path, number, IngestErrorKind::kReference,
            "check " + id + " is derived from the model and cannot be declared");
    }
    if (!facts.emplace(id, value == "true").second) {
      Throw(path, number, IngestErrorKind::kDuplicate,
            "duplicate check id " + id);
    }
  }
  return facts;
}

std::map<std::string, bool> ReadChecklistFacts(const std::string& path) {
  return ParseChecklistFacts(ReadFile(path), path);
}

}  // namespace moometrics
