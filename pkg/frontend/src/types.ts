/** Payload shapes of the review-service JSON API, mirrored field for field. */

export interface SuspiciousRecord {
  id: number;
  word: string;
  count: number;
  value: number;
  matched_slang: string;
}

export interface LexiconEntry {
  id: number;
  lexeme: string;
}

export interface ConceptEntry {
  id: number;
  name: string;
  weight: number;
  synset: string[];
}

export interface ServiceConfig {
  mode: string;
  window_length: number;
  threshold: number;
  default_weight: number;
  soundalike_fallback: boolean;
}

export interface ConceptMatch {
  id: number;
  name: string;
  weight: number;
  overlap: number;
}

export interface ExactMatch {
  token_position: number;
  lexeme: string;
}

export interface SoundAlikeMatch {
  token_position: number;
  variant: string;
  canonical: string;
  source: "table" | "phonetic";
}

export interface SuspicionHit {
  token_position: number;
  word: string;
  matched_slang: string;
  window: string;
  offset: number;
}

export type Verdict = "Clean" | "Blocked" | "NeedsRevision" | "Flagged";

export interface DetectionReport {
  verdict: Verdict;
  concept: ConceptMatch | null;
  exact_matches: ExactMatch[];
  soundalike_matches: SoundAlikeMatch[];
  suspicion_hits: SuspicionHit[];
  promotions: string[];
}

export interface ReviewDecision {
  word: string;
  action: "confirm" | "dismiss";
  decided_at: string;
}
