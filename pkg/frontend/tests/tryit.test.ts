import { describe, expect, it } from "vitest";

import { renderReport } from "../src/views/tryit.js";
import type { DetectionReport } from "../src/types.js";

function report(overrides: Partial<DetectionReport>): DetectionReport {
  return {
    verdict: "Clean",
    concept: null,
    exact_matches: [],
    soundalike_matches: [],
    suspicion_hits: [],
    promotions: [],
    ...overrides,
  };
}

describe("renderReport", () => {
  it("shows a Blocked banner naming the slang word", () => {
    const html = renderReport(report({
      verdict: "Blocked",
      exact_matches: [{ token_position: 0, lexeme: "alpha" }],
    }));
    expect(html).toContain("verdict-blocked");
    expect(html).toContain(">Blocked<");
    expect(html).toContain("alpha at position 0");
  });

  it("shows a Clean banner without match sections", () => {
    const html = renderReport(report({}));
    expect(html).toContain("verdict-clean");
    expect(html).toContain(">Clean<");
    expect(html).not.toContain("<section>");
  });

  it("lists suspicious words with their window and concept", () => {
    const html = renderReport(report({
      verdict: "Flagged",
      concept: { id: 1, name: "Movie", weight: 10, overlap: 3 },
      suspicion_hits: [{
        token_position: 8, word: "kalphaa", matched_slang: "alpha",
        window: "alph", offset: 1,
      }],
    }));
    expect(html).toContain("verdict-flagged");
    expect(html).toContain("concept: Movie (weight 10, overlap 3)");
    expect(html).toContain("kalphaa partially matches alpha");
  });

  it("shows sounds-alike matches with their source", () => {
    const html = renderReport(report({
      verdict: "NeedsRevision",
      soundalike_matches: [{
        token_position: 1, variant: "alfa", canonical: "alpha", source: "table",
      }],
    }));
    expect(html).toContain("verdict-revision");
    expect(html).toContain("alfa sounds like alpha (table)");
  });

  it("lists promotions when a text tipped words over the threshold", () => {
    const html = renderReport(report({
      verdict: "Flagged",
      suspicion_hits: [{
        token_position: 0, word: "kalphaa", matched_slang: "alpha",
        window: "alph", offset: 1,
      }],
      promotions: ["kalphaa"],
    }));
    expect(html).toContain("Promoted to the lexicon");
  });
});
