/**
 * View controller: owns the latest API snapshots and produces the markup for
 * whichever view is active. Keeping this DOM-free makes the moderation flows
 * testable with a mocked client; main.ts only paints strings and wires events.
 *
 * The server stays the source of truth: every decision and filter run is
 * followed by a refetch, never by local state edits.
 */
import { ApiClient } from "./api.js";
import { escapeHtml } from "./html.js";
import { renderLexicon } from "./views/lexicon.js";
import { renderQueue } from "./views/queue.js";
import { renderReport } from "./views/tryit.js";
import type { DetectionReport } from "./types.js";

export type View = "queue" | "lexicon" | "tryit";

export class App {
  view: View = "queue";
  private threshold = 0;
  private queueHtml = "";
  private lexiconHtml = "";
  private reportHtml = "";
  private errorHtml = "";
  private dismissed = new Set<string>();

  constructor(private readonly api: ApiClient) {}

  /** Markup for the active view, prefixed with any pending error banner. */
  render(): string {
    const body =
      this.view === "queue" ? this.queueHtml
      : this.view === "lexicon" ? this.lexiconHtml
      : this.reportHtml;
    return this.errorHtml + body;
  }

  async start(): Promise<void> {
    try {
      const config = await this.api.getConfig();
      this.threshold = config.threshold;
    } catch (error) {
      this.errorHtml = renderError(`service unreachable: ${describe(error)}`);
      return;
    }
    await this.refresh();
  }

  async show(view: View): Promise<void> {
    this.view = view;
    await this.refresh();
  }

  /** Refetch whatever the active view displays. */
  async refresh(): Promise<void> {
    this.errorHtml = "";
    try {
      if (this.view === "queue") {
        const records = await this.api.getSuspicious();
        this.queueHtml = renderQueue(records, this.threshold, this.dismissed);
      } else if (this.view === "lexicon") {
        const [slang, concepts] = await Promise.all([
          this.api.getSlang(),
          this.api.getConcepts(),
        ]);
        this.lexiconHtml = renderLexicon(slang, concepts);
      }
    } catch (error) {
      this.errorHtml = renderError(describe(error));
    }
  }

  async decide(word: string, action: "confirm" | "dismiss"): Promise<void> {
    this.errorHtml = "";
    try {
      await this.api.decide(word, action);
      if (action === "dismiss") this.dismissed.add(word);
      else this.dismissed.delete(word);
    } catch (error) {
      this.errorHtml = renderError(`${action} ${word} failed: ${describe(error)}`);
    }
    await this.refreshQueueOnly();
  }

  async tryFilter(text: string): Promise<DetectionReport | null> {
    this.errorHtml = "";
    try {
      const report = await this.api.filterText(text);
      this.reportHtml = renderReport(report);
      await this.refreshQueueOnly();
      return report;
    } catch (error) {
      this.errorHtml = renderError(describe(error));
      return null;
    }
  }

  private async refreshQueueOnly(): Promise<void> {
    try {
      const records = await this.api.getSuspicious();
      this.queueHtml = renderQueue(records, this.threshold, this.dismissed);
    } catch (error) {
      this.errorHtml = renderError(describe(error));
    }
  }
}

export function renderError(message: string): string {
  return (
    `<div class="error-banner">${escapeHtml(message)}` +
    ` <button data-action="retry">retry</button></div>`
  );
}

function describe(error: unknown): string {
  return error instanceof Error ? error.message : String(error);
}
