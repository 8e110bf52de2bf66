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

#include <random>

#include <gtest/gtest.h>

#include "moometrics/errors.h"
#include "test_support.h"

namespace moometrics {
namespace {

// Runs `parse` and returns the IngestError it must throw.
template <typename F>
IngestError ErrorOf(F parse) {
  try {
    parse();
  } catch (const IngestError& e) {
    return e;
  }
  ADD_FAILURE() << "no IngestError thrown";
  return IngestError("", 0, IngestErrorKind::kFormat, "");
}

TEST(ParseRequirements, TwoRequirementsTwoReviewers) {
  const RequirementSet reqs = ParseRequirements(
      "reviewer ann\n"
      "reviewer bob\n"
      "# comment lines and blank lines are skipped\n"
      "\n"
      "req R1 \"The \\\"cart\\\" keeps items\" valid\n"
      "req R2 \"Totals update\" notyetvalid\n"
      "verdict R1 ann \"cart stores items\"\n"
      "verdict R1 bob \"cart stores items\"\n"
      "verdict R2 ann \"live totals\"\n"
      "verdict R2 bob \"totals on checkout\"\n"
      "change R1 1 clarification\n"
      "change R1 4 business\n"
      "entity List requires add,delete,find,size\n"
      "entity List provides add,delete\n",
      "a.req");
  EXPECT_EQ(reqs.requirements.size(), 2u);
  EXPECT_EQ(reqs.reviewers, (std::set<std::string>{"ann", "bob"}));
  EXPECT_EQ(reqs.requirements[0].text, "The \"cart\" keeps items");
  EXPECT_EQ(reqs.requirements[1].validity, Validity::kNotYetValid);
  EXPECT_EQ(reqs.requirements[1].reviewer_verdicts.at("bob"),
            "totals on checkout");
  ASSERT_EQ(reqs.requirements[0].changes.size(), 2u);
  EXPECT_EQ(reqs.requirements[0].changes[1].reason, ChangeReason::kBusiness);
  EXPECT_EQ(reqs.entity_checklists.at("List").required_services.size(), 4u);
  EXPECT_TRUE(ValidateRequirementSet(reqs).empty());
}

TEST(ParseRequirements, DuplicateIdNamesIdAndLine) {
  const IngestError e = ErrorOf([] {
    ParseRequirements("req R1 \"a\" valid\n\nreq R1 \"b\" valid\n", "a.req");
  });
  EXPECT_EQ(e.kind(), IngestErrorKind::kDuplicate);
  EXPECT_EQ(e.line(), 3);
  EXPECT_EQ(e.path(), "a.req");
  EXPECT_NE(std::string(e.what()).find("R1"), std::string::npos);
  EXPECT_EQ(std::string(e.what()).rfind("a.req:3: ", 0), 0u);
}

TEST(ParseRequirements, NonIncreasingChangeSequence) {
  const IngestError e = ErrorOf([] {
    ParseRequirements(
        "req R1 \"a\" valid\nchange R1 7 business\nchange R1 5 error\n",
        "a.req");
  });
  EXPECT_EQ(e.kind(), IngestErrorKind::kFormat);
  EXPECT_EQ(e.line(), 3);
}

TEST(ParseRequirements, UndeclaredReviewer) {
  const IngestError e = ErrorOf([] {
    ParseRequirements("req R1 \"a\" valid\nverdict R1 zed \"x\"\n", "a.req");
  });
  EXPECT_EQ(e.kind(), IngestErrorKind::kReference);
  EXPECT_EQ(e.line(), 2);
}

TEST(ParseRequirements, MalformedLines) {
  for (const char* text : {
           "req R1 unquoted valid\n",
           "req R1 \"a\" maybe\n",
           "req R1 \"unterminated valid\n",
           "frobnicate R1\n",
           "req R1 \"a\" valid\nchange R1 x business\n",
           "req R1 \"a\" valid\nchange R1 1 whim\n",
           "entity L lists a\n",
       }) {
    const IngestError e = ErrorOf([&] { ParseRequirements(text, "a.req"); });
    EXPECT_EQ(e.kind(), IngestErrorKind::kFormat) << text;
    EXPECT_GE(e.line(), 1) << text;
  }
}

TEST(ParseRequirements, ProvidesWithoutRequires) {
  const IngestError e = ErrorOf(
      [] { ParseRequirements("entity L provides a\n", "a.req"); });
  EXPECT_EQ(e.kind(), IngestErrorKind::kReference);
  EXPECT_EQ(e.line(), 1);
}

TEST(ParseUseCases, Cardinalities) {
  const UseCaseModel model = ParseUseCases(
      "actor customer\nactor clerk\nusecase checkout\n"
      "uses checkout customer\nuses checkout clerk\n"
      "message checkout scan\nmessage checkout pay\nmessage checkout scan\n"
      "message checkout bag\nmessage checkout receipt\n"
      "class checkout Order\nclass checkout Inventory\nclass checkout Billing\n"
      "class checkout Order\n",
      "a.ucm");
  ASSERT_EQ(model.use_cases.size(), 1u);
  const UseCase& u = model.use_cases[0];
  EXPECT_EQ(u.associated_actors.size(), 2u);
  EXPECT_EQ(u.messages.size(), 5u);
  EXPECT_EQ(u.system_classes.size(), 3u);
}

TEST(ParseUseCases, UndeclaredActor) {
  const IngestError e = ErrorOf([] {
    ParseUseCases("actor a\nusecase u\nuses u Z\n", "a.ucm");
  });
  EXPECT_EQ(e.kind(), IngestErrorKind::kReference);
  EXPECT_EQ(e.line(), 3);
}

TEST(ParseUseCases, EmptyAndErrors) {
  EXPECT_TRUE(ParseUseCases("", "a.ucm").use_cases.empty());
  EXPECT_TRUE(ParseUseCases("# nothing\n", "a.ucm").use_cases.empty());
  EXPECT_EQ(ErrorOf([] { ParseUseCases("message u m\n", "a.ucm"); }).kind(),
            IngestErrorKind::kReference);
  EXPECT_EQ(
      ErrorOf([] { ParseUseCases("usecase u\nusecase u\n", "a.ucm"); }).kind(),
      IngestErrorKind::kDuplicate);
}

TEST(ParseTrace, ThreeEventKinds) {
  const CoverageTrace trace =
      ParseTrace("M p.A.m1\n# comment\nS sp3\nB br1 taken\nS sp3\n", "dir/run7.trc");
  EXPECT_EQ(trace.run_id, "run7");
  ASSERT_EQ(trace.events.size(), 4u);
  EXPECT_EQ(std::get<MethodEntryEvent>(trace.events[0].event).method_id,
            "p.A.m1");
  EXPECT_EQ(std::get<PointEvent>(trace.events[1].event).point_id, "sp3");
  EXPECT_EQ(trace.events[1].line, 3);
  const auto& arm = std::get<BranchArmEvent>(trace.events[2].event);
  EXPECT_EQ(arm.branch_id, "br1");
  EXPECT_EQ(arm.arm, BranchArm::kTaken);
  // Duplicates are kept in file order.
  EXPECT_EQ(trace.events[3], (TraceEvent{PointEvent{"sp3"}, 5}));
}

TEST(ParseTrace, BadArm) {
  const IngestError e =
      ErrorOf([] { ParseTrace("S sp1\nB br1 sideways\n", "a.trc"); });
  EXPECT_EQ(e.kind(), IngestErrorKind::kFormat);
  EXPECT_EQ(e.line(), 2);
}

TEST(ParseTrace, EmptyAndMalformed) {
  EXPECT_TRUE(ParseTrace("", "a.trc").events.empty());
  for (const char* text : {"X sp1\n", "S\n", "S sp1 extra\n", "B br1\n"}) {
    EXPECT_EQ(ErrorOf([&] { ParseTrace(text, "a.trc"); }).kind(),
              IngestErrorKind::kFormat)
        << text;
  }
}

TEST(ParseChecklistFacts, Forms) {
  EXPECT_EQ(ParseChecklistFacts("testable.logging = true\n", "a.chk"),
            (std::map<std::string, bool>{{"testable.logging", true}}));
  EXPECT_EQ(ErrorOf([] {
              ParseChecklistFacts(
                  "testable.logging = true\ntestable.logging = false\n",
                  "a.chk");
            }).kind(),
            IngestErrorKind::kDuplicate);
  EXPECT_EQ(ErrorOf([] {
              ParseChecklistFacts("portable.unknown_check = true\n", "a.chk");
            }).kind(),
            IngestErrorKind::kReference);
  // Derived checks are computed, never declared.
  EXPECT_EQ(ErrorOf([] {
              ParseChecklistFacts("maintainable.modularity = true\n", "a.chk");
            }).kind(),
            IngestErrorKind::kReference);
  EXPECT_EQ(ErrorOf([] {
              ParseChecklistFacts("testable.logging = yes\n", "a.chk");
            }).kind(),
            IngestErrorKind::kFormat);
}

TEST(ReadFile, MissingFileIsFileError) {
  EXPECT_THROW(ReadRequirements("/nonexistent/a.req"), FileError);
  EXPECT_THROW(ReadTrace("/nonexistent/a.trc"), FileError);
}

RequirementSet RandomRequirementSet(std::mt19937& rng) {
  std::uniform_int_distribution<int> small(0, 4);
  RequirementSet reqs;
  const int reviewers = small(rng);
  for (int r = 0; r < reviewers; ++r) reqs.reviewers.insert("rv" + std::to_string(r));
  const int n = small(rng) + small(rng);
  const std::string labels[] = {"a", "b b", "quote \" here", "back\\slash",
                                "line\nbreak"};
  for (int i = 0; i < n; ++i) {
    Requirement req;
    req.id = "R" + std::to_string(i);
    req.text = labels[small(rng)];
    req.validity = small(rng) % 2 ? Validity::kValid : Validity::kNotYetValid;
    for (const auto& reviewer : reqs.reviewers) {
      if (small(rng) > 0) req.reviewer_verdicts[reviewer] = labels[small(rng)];
    }
    std::int64_t seq = 0;
    for (int c = small(rng); c > 0; --c) {
      seq += 1 + small(rng);
      req.changes.push_back({seq, static_cast<ChangeReason>(small(rng))});
    }
    reqs.requirements.push_back(std::move(req));
  }
  for (int e = small(rng); e > 0; --e) {
    EntityChecklist checklist;
    for (int s = 0; s <= small(rng); ++s) {
      checklist.required_services.insert("svc" + std::to_string(s));
    }
    for (int s = small(rng); s > 0; --s) {
      checklist.provided_services.insert("svc" + std::to_string(s * 2));
    }
    reqs.entity_checklists["E" + std::to_string(e)] = std::move(checklist);
  }
  return reqs;
}

TEST(RoundTrip, RequirementSets) {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    const RequirementSet reqs = RandomRequirementSet(rng);
    ASSERT_TRUE(ValidateRequirementSet(reqs).empty());
    const std::string text = WriteRequirements(reqs);
    EXPECT_EQ(ParseRequirements(text, "rt.req"), reqs) << text;
  }
}

TEST(RoundTrip, UseCaseModels) {
  std::mt19937 rng(12);
  std::uniform_int_distribution<int> small(0, 4);
  for (int i = 0; i < 100; ++i) {
    UseCaseModel model;
    for (int a = small(rng); a > 0; --a) model.actors.insert("actor" + std::to_string(a));
    for (int u = small(rng); u > 0; --u) {
      UseCase use_case{"uc" + std::to_string(u), {}, {}, {}};
      for (const auto& actor : model.actors) {
        if (small(rng) % 2) use_case.associated_actors.insert(actor);
      }
      for (int m = small(rng); m > 0; --m) {
        use_case.messages.push_back("msg" + std::to_string(small(rng)));
      }
      for (int c = small(rng); c > 0; --c) {
        use_case.system_classes.insert("Class" + std::to_string(c));
      }
      model.use_cases.push_back(std::move(use_case));
    }
    EXPECT_EQ(ParseUseCases(WriteUseCases(model), "rt.ucm"), model);
  }
}

}  // namespace
}  // namespace moometrics
