/** Read-only view of the slang lexicon and the concept table. */
import { escapeHtml } from "../html.js";
import type { ConceptEntry, LexiconEntry } from "../types.js";

export function renderLexicon(
  slang: LexiconEntry[],
  concepts: ConceptEntry[],
): string {
  return `
    <section>
      <h2>Slang lexicon</h2>
      ${slangTable(slang)}
    </section>
    <section>
      <h2>Concepts</h2>
      ${conceptTable(concepts)}
    </section>`;
}

function slangTable(slang: LexiconEntry[]): string {
  if (slang.length === 0) {
    return `<p class="empty-state">The lexicon is empty.</p>`;
  }
  const rows = slang
    .map(
      (entry) =>
        `<tr><td>${entry.id}</td><td class="word">${escapeHtml(entry.lexeme)}</td></tr>`,
    )
    .join("\n");
  return `
    <table class="lexicon-table">
      <thead><tr><th>id</th><th>lexeme</th></tr></thead>
      <tbody>${rows}</tbody>
    </table>`;
}

function conceptTable(concepts: ConceptEntry[]): string {
  const rows = concepts
    .map(
      (concept) => `
      <tr>
        <td>${escapeHtml(concept.name)}</td>
        <td>${concept.weight}</td>
        <td>${concept.synset.map(escapeHtml).join(", ")}</td>
      </tr>`,
    )
    .join("\n");
  return `
    <table class="concept-table">
      <thead><tr><th>concept</th><th>weight</th><th>synset</th></tr></thead>
      <tbody>${rows}</tbody>
    </table>`;
}
