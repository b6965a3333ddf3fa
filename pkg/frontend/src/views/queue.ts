/**
 * Review queue: one row per suspicious word, sorted by accumulated value,
 * with a progress bar against the promotion threshold and confirm/dismiss
 * buttons. Pure string rendering; event wiring lives in main.ts.
 */
import { escapeHtml } from "../html.js";
import { progressLabel, progressPercent } from "../progress.js";
import type { SuspiciousRecord } from "../types.js";

export function renderQueue(
  records: SuspiciousRecord[],
  threshold: number,
  dismissedWords: Set<string> = new Set(),
): string {
  if (records.length === 0) {
    return `<p class="empty-state">The suspicious queue is empty.</p>`;
  }
  const rows = [...records]
    .sort((a, b) => b.value - a.value || a.id - b.id)
    .map((record) => queueRow(record, threshold, dismissedWords.has(record.word)))
    .join("\n");
  return `
    <table class="queue-table">
      <thead>
        <tr>
          <th>word</th><th>count</th><th>value</th>
          <th>matched slang</th><th>progress</th><th></th>
        </tr>
      </thead>
      <tbody>${rows}</tbody>
    </table>`;
}

function queueRow(
  record: SuspiciousRecord,
  threshold: number,
  dismissed: boolean,
): string {
  const word = escapeHtml(record.word);
  const badge = dismissed ? `<span class="badge">dismissed</span>` : "";
  return `
    <tr data-word="${word}">
      <td class="word">${word} ${badge}</td>
      <td>${record.count}</td>
      <td>${record.value}</td>
      <td>${escapeHtml(record.matched_slang)}</td>
      <td class="progress-cell">
        <div class="progress-track">
          <div class="progress-fill" style="width: ${progressPercent(record.value, threshold)}"></div>
        </div>
        <span class="progress-label">${progressLabel(record.value, threshold)}</span>
      </td>
      <td class="actions">
        <button data-action="confirm" data-word="${word}">confirm</button>
        <button data-action="dismiss" data-word="${word}">dismiss</button>
      </td>
    </tr>`;
}
