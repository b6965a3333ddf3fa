/** Presentation helpers for threshold progress; capped for display only. */

/** Fraction of the way to promotion, capped at 1 for rendering. */
export function progressFraction(value: number, threshold: number): number {
  if (threshold <= 0) return 1;
  return Math.min(value / threshold, 1);
}

/** Bar width as a CSS percentage string, e.g. 10/50 -> "20%". */
export function progressPercent(value: number, threshold: number): string {
  return `${Math.round(progressFraction(value, threshold) * 100)}%`;
}

/** Label shown next to the bar, e.g. "10 / 50". */
export function progressLabel(value: number, threshold: number): string {
  return `${value} / ${threshold}`;
}
