import { describe, expect, it } from "vitest";

import { renderQueue } from "../src/views/queue.js";
import type { SuspiciousRecord } from "../src/types.js";

function record(id: number, word: string, value = 10, count = 1): SuspiciousRecord {
  return { id, word, count, value, matched_slang: "alpha" };
}

const FOUR_WORDS = [
  record(1, "kalphaa"),
  record(2, "bbbbetaa"),
  record(3, "gaaaamaa"),
  record(4, "deeeeltaa"),
];

describe("renderQueue", () => {
  it("renders one row per record with 10/50 progress", () => {
    const html = renderQueue(FOUR_WORDS, 50);
    expect(html.match(/<tr data-word=/g)).toHaveLength(4);
    for (const row of FOUR_WORDS) {
      expect(html).toContain(`data-word="${row.word}"`);
    }
    expect(html.match(/10 \/ 50/g)).toHaveLength(4);
    expect(html.match(/width: 20%/g)).toHaveLength(4);
  });

  it("shows 80% progress for a word at 40 of 50", () => {
    const html = renderQueue([record(1, "kalphaa", 40, 4)], 50);
    expect(html).toContain("width: 80%");
    expect(html).toContain("40 / 50");
  });

  it("sorts by value descending, then id", () => {
    const html = renderQueue(
      [record(1, "low", 7), record(2, "high", 30), record(3, "mid", 10)],
      50,
    );
    const order = [...html.matchAll(/data-word="(\w+)"/g)].map((m) => m[1]);
    // each row carries the attribute twice (row + buttons); dedupe in order
    expect([...new Set(order)]).toEqual(["high", "mid", "low"]);
  });

  it("renders an empty state for an empty queue", () => {
    expect(renderQueue([], 50)).toContain("queue is empty");
  });

  it("offers confirm and dismiss buttons per row", () => {
    const html = renderQueue([record(1, "kalphaa")], 50);
    expect(html).toContain(`data-action="confirm" data-word="kalphaa"`);
    expect(html).toContain(`data-action="dismiss" data-word="kalphaa"`);
  });

  it("badges dismissed words", () => {
    const html = renderQueue(FOUR_WORDS, 50, new Set(["gaaaamaa"]));
    expect(html.match(/class="badge"/g)).toHaveLength(1);
  });

  it("escapes markup in API strings", () => {
    const html = renderQueue([record(1, "<img>")], 50);
    expect(html).not.toContain("<img>");
    expect(html).toContain("&lt;img&gt;");
  });
});
