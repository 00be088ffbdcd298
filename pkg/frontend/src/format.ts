/** Display formatting. Weight charts show 4 decimals; deviations show
 * percent with two decimals. */

export function fmt4(x: number): string {
  return x.toFixed(4);
}

export function pct(fraction: number): string {
  return `${(100 * fraction).toFixed(2)}%`;
}

export function signed4(x: number): string {
  return `${x >= 0 ? "+" : ""}${x.toFixed(4)}`;
}
