/**
 * Three linked weights that always form a valid simplex.
 *
 * Moving one weight rescales the other two proportionally (equal split when
 * they are both zero), and the moved value is clamped to [0, 1]. This is
 * slider mechanics, not domain math: the weights only ever feed the service.
 */

export type SimplexTriple = [number, number, number];

export function setWeight(
  current: SimplexTriple,
  index: 0 | 1 | 2,
  value: number,
): SimplexTriple {
  const moved = Math.min(1, Math.max(0, value));
  const remainder = 1 - moved;
  const others: number[] = [];
  for (let i = 0; i < 3; i++) {
    if (i !== index) others.push(current[i]);
  }
  const othersSum = others[0] + others[1];
  let first: number;
  let second: number;
  if (othersSum <= 0) {
    first = remainder / 2;
    second = remainder / 2;
  } else {
    first = (others[0] / othersSum) * remainder;
    second = remainder - first; // exact complement kills float drift
  }
  const next: number[] = [];
  let consumed = 0;
  for (let i = 0; i < 3; i++) {
    if (i === index) {
      next.push(moved);
    } else {
      next.push(consumed === 0 ? first : second);
      consumed++;
    }
  }
  return next as SimplexTriple;
}

export function isValidSimplex(triple: SimplexTriple, tolerance = 1e-9): boolean {
  const [a, b, c] = triple;
  const inRange = (x: number) => x >= 0 && x <= 1 && Number.isFinite(x);
  return inRange(a) && inRange(b) && inRange(c) && Math.abs(a + b + c - 1) <= tolerance;
}
