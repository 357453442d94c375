/** Pure scene geometry, mirroring the server's layout so the one scene
 * encoding drives both renderers. No DOM access here. */

import { Scene, SceneVertex, SceneWire } from "./types.js";

export const SCALE = 48;
export const MARGIN = 24;

export function canvasSize(scene: Scene): { width: number; height: number } {
  return {
    width: Math.round(2 * MARGIN + SCALE * scene.width),
    height: Math.round(2 * MARGIN + SCALE * scene.height),
  };
}

export function toCanvas(scene: Scene, x: number, y: number): { cx: number; cy: number } {
  // diagram height grows upward
  return { cx: MARGIN + SCALE * x, cy: MARGIN + SCALE * (scene.height - y) };
}

export function wirePath(scene: Scene, wire: SceneWire): string {
  const points = wire.points.map(([x, y]) => toCanvas(scene, x, y));
  if (points.length === 0) return "";
  const parts = [`M ${points[0].cx.toFixed(1)} ${points[0].cy.toFixed(1)}`];
  for (let i = 1; i < points.length; i += 1) {
    const a = points[i - 1];
    const b = points[i];
    if (a.cx === b.cx) {
      parts.push(`L ${b.cx.toFixed(1)} ${b.cy.toFixed(1)}`);
    } else {
      const my = (a.cy + b.cy) / 2;
      parts.push(
        `C ${a.cx.toFixed(1)} ${my.toFixed(1)}, ${b.cx.toFixed(1)} ${my.toFixed(1)}, ` +
        `${b.cx.toFixed(1)} ${b.cy.toFixed(1)}`,
      );
    }
  }
  return parts.join(" ");
}

/** Index of the vertex nearest a canvas point, within the pick radius. */
export function hitVertex(scene: Scene, cx: number, cy: number, radius = 18): number | null {
  let best: number | null = null;
  let bestDist = radius * radius;
  scene.vertices.forEach((vertex, index) => {
    const at = toCanvas(scene, vertex.x, vertex.y);
    const dist = (at.cx - cx) ** 2 + (at.cy - cy) ** 2;
    if (dist <= bestDist) {
      best = index;
      bestDist = dist;
    }
  });
  return best;
}

/** A vertex at diagram height i sits at y = i + 0.5. */
export function vertexLocation(vertex: SceneVertex): { height: number; coords: number[] } {
  return { height: Math.floor(vertex.y), coords: [] };
}

export function scenesEqual(a: Scene | null, b: Scene | null): boolean {
  if (a === null || b === null) return a === b;
  return JSON.stringify(a) === JSON.stringify(b);
}
