import { NODE_HALF, canvasSize, layoutPositions } from "./layout.js";
import type { Report, SeedState } from "./model.js";
import type { PanelId } from "./store.js";

export function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

// Pure string rendering: same state in, same SVG out, byte for byte.
export function renderQuiverSvg(panelId: PanelId, seed: SeedState): string {
  const positions = layoutPositions(seed.vertices.length);
  const index = new Map<string, number>();
  seed.vertices.forEach((v, i) => index.set(v.name, i));
  const { width, height } = canvasSize(seed.vertices.length);
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${height}" ` +
      `width="${width}" height="${height}" class="quiver">`,
  );
  parts.push(
    '<defs><marker id="arrowhead" markerWidth="8" markerHeight="8" refX="7" refY="4" orient="auto">' +
      '<path d="M0,0 L8,4 L0,8 z"/></marker></defs>',
  );
  for (const arrow of seed.arrows) {
    const ai = index.get(arrow.from);
    const bi = index.get(arrow.to);
    if (ai === undefined || bi === undefined) {
      continue;
    }
    const a = positions[ai];
    const b = positions[bi];
    const dir = Math.sign(b.x - a.x) || 1;
    const x1 = a.x + dir * (NODE_HALF + 4);
    const x2 = b.x - dir * (NODE_HALF + 8);
    const span = Math.abs(bi - ai);
    const lift = span > 1 ? 34 + 8 * span : 0;
    const midX = (x1 + x2) / 2;
    const midY = a.y - lift;
    parts.push(
      `<path class="arrow" d="M ${x1} ${a.y} Q ${midX} ${midY} ${x2} ${b.y}" ` +
        'fill="none" marker-end="url(#arrowhead)"/>',
    );
    if (arrow.mult !== 1) {
      const labelY = (lift > 0 ? midY : a.y) - 8;
      parts.push(
        `<text class="mult" x="${midX}" y="${labelY}" text-anchor="middle">` +
          `${arrow.mult}</text>`,
      );
    }
  }
  seed.vertices.forEach((v, i) => {
    const p = positions[i];
    const name = escapeXml(v.name);
    if (v.frozen) {
      parts.push(
        `<rect class="vertex frozen" data-panel="${panelId}" data-vertex="${name}" ` +
          `x="${p.x - NODE_HALF}" y="${p.y - NODE_HALF}" ` +
          `width="${NODE_HALF * 2}" height="${NODE_HALF * 2}"/>`,
      );
    } else {
      parts.push(
        `<circle class="vertex mutable" data-panel="${panelId}" data-vertex="${name}" ` +
          `data-clickable="1" cx="${p.x}" cy="${p.y}" r="${NODE_HALF}"/>`,
      );
    }
    parts.push(
      `<text class="badge" x="${p.x + NODE_HALF + 2}" y="${p.y - NODE_HALF - 2}">` +
        `${v.degree}</text>`,
    );
    parts.push(
      `<text class="name" x="${p.x}" y="${p.y + NODE_HALF + 18}" text-anchor="middle">` +
        `${name}</text>`,
    );
  });
  parts.push("</svg>");
  return parts.join("");
}

// Inspector rows: the value strings come from the service verbatim.
export function renderInspectorRows(seed: SeedState): string {
  return seed.vertices
    .map(
      (v) =>
        `<tr><td>${escapeXml(v.name)}</td>` +
        `<td>${v.frozen ? "frozen" : "mutable"}</td>` +
        `<td>${v.degree}</td>` +
        `<td class="value">${escapeXml(v.value)}</td></tr>`,
    )
    .join("");
}

export function renderHistory(seed: SeedState): string {
  const history = seed.history ?? [];
  return history.length ? history.map(escapeXml).join(" → ") : "(initial)";
}

export function renderReport(report: Report): string {
  const lines: string[] = [`<p class="status status-${escapeXml(report.status)}">status: ${escapeXml(report.status)}</p>`];
  if (report.kappa !== null && report.kappa !== undefined) {
    lines.push(`<p>kappa: ${report.kappa}</p>`);
  }
  if (report.K !== null && report.K !== undefined) {
    lines.push(`<p>K: ${report.K}</p>`);
  }
  for (const w of report.witnesses.slice(0, 3)) {
    const seq = w.sequence.length ? w.sequence.join(" ") : "(initial)";
    lines.push(
      `<div class="witness"><p>at [${escapeXml(seq)}] slot ${escapeXml(w.slot)}</p>` +
        `<p>expected <code>${escapeXml(w.expected)}</code></p>` +
        `<p>actual <code>${escapeXml(w.actual)}</code></p></div>`,
    );
  }
  return lines.join("");
}
