/**
 * Display formatting only. These helpers render numbers the service (or
 * the user) supplied; they must never derive new domain values.
 */

export function fixed(value: number, digits = 2): string {
  return value.toFixed(digits);
}

/** Trim trailing zeros for compact labels: 3.20 -> "3.2", 20.00 -> "20". */
export function compact(value: number): string {
  if (Number.isInteger(value)) {
    return String(value);
  }
  return String(parseFloat(value.toFixed(4)));
}

export function percent(value: number): string {
  return `${Math.round(value * 100)}%`;
}
