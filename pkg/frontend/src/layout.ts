// Deterministic layered layout: vertices sit on one row in variable order,
// so the same state always renders to the same picture.

export interface Point {
  x: number;
  y: number;
}

export const NODE_HALF = 16;
export const ROW_Y = 90;
export const SPACING = 120;
export const MARGIN = 70;

export function layoutPositions(count: number): Point[] {
  const points: Point[] = [];
  for (let i = 0; i < count; i += 1) {
    points.push({ x: MARGIN + i * SPACING, y: ROW_Y });
  }
  return points;
}

export function canvasSize(count: number): { width: number; height: number } {
  return { width: MARGIN * 2 + Math.max(count - 1, 0) * SPACING, height: 190 };
}
