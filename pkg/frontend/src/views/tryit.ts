/**
 * Try-it sandbox: renders a detection report returned by POST /api/filter.
 * The verdict banner is the headline; match details follow per category.
 */
import { escapeHtml } from "../html.js";
import type { DetectionReport, Verdict } from "../types.js";

const VERDICT_CLASSES: Record<Verdict, string> = {
  Clean: "verdict-clean",
  Blocked: "verdict-blocked",
  NeedsRevision: "verdict-revision",
  Flagged: "verdict-flagged",
};

export function renderReport(report: DetectionReport): string {
  const parts = [
    `<div class="verdict-banner ${VERDICT_CLASSES[report.verdict]}">${report.verdict}</div>`,
  ];
  if (report.concept) {
    parts.push(
      `<p class="concept">concept: ${escapeHtml(report.concept.name)}` +
        ` (weight ${report.concept.weight}, overlap ${report.concept.overlap})</p>`,
    );
  }
  if (report.exact_matches.length > 0) {
    parts.push(listSection(
      "Slang words",
      report.exact_matches.map((m) => `${m.lexeme} at position ${m.token_position}`),
    ));
  }
  if (report.soundalike_matches.length > 0) {
    parts.push(listSection(
      "Sounds-alike matches",
      report.soundalike_matches.map(
        (m) => `${m.variant} sounds like ${m.canonical} (${m.source})`,
      ),
    ));
  }
  if (report.suspicion_hits.length > 0) {
    parts.push(listSection(
      "Suspicious words",
      report.suspicion_hits.map(
        (h) => `${h.word} partially matches ${h.matched_slang} (window "${h.window}")`,
      ),
    ));
  }
  if (report.promotions.length > 0) {
    parts.push(listSection("Promoted to the lexicon", report.promotions));
  }
  return parts.join("\n");
}

function listSection(title: string, items: string[]): string {
  const rendered = items
    .map((item) => `<li>${escapeHtml(item)}</li>`)
    .join("\n");
  return `<section><h3>${title}</h3><ul>${rendered}</ul></section>`;
}
