/** Framework-free application state machine. The displayed scene always
 * reflects the server's current state: every load/apply/undo refetches the
 * projection rather than mutating anything locally. */
import { ApiError } from "./api.js";
import { vertexLocation } from "./geometry.js";
export function moveToStep(move) {
    const step = {
        move: "homotopy",
        family: move.family,
        height: move.height,
        direction: move.direction,
    };
    if (move.variant === "primed") {
        step.primed = true;
    }
    else if (move.variant) {
        step.variant = move.variant;
    }
    return step;
}
export function moveLabel(move) {
    const dir = move.direction === "forward" ? "" : "⁻¹";
    const variant = move.variant ? ` (${move.variant})` : "";
    return `${move.family}${dir}${variant} @ ${move.height}`;
}
export class ViewModel {
    constructor(api) {
        this.api = api;
        this.state = {
            session: null,
            scene: null,
            dim: 0,
            selected: null,
            moves: [],
            script: [],
            error: null,
            note: null,
        };
        this.listeners = [];
    }
    onChange(listener) {
        this.listeners.push(listener);
    }
    emit() {
        for (const listener of this.listeners)
            listener(this.state);
    }
    async refresh() {
        if (!this.state.session)
            return;
        const payload = await this.api.state(this.state.session);
        this.state.scene = await this.api.projection(this.state.session);
        this.state.script = payload.steps;
        this.state.dim = payload.dim;
    }
    async load(documentText) {
        this.state.error = null;
        this.state.selected = null;
        this.state.moves = [];
        try {
            const payload = await this.api.createSession(documentText);
            this.state.session = payload.session;
            await this.refresh();
            this.state.note = `session ${payload.session}`;
        }
        catch (err) {
            this.state.error = describe(err);
        }
        this.emit();
    }
    /** Click on a vertex: query the applicable moves at its location. */
    async clickVertex(index) {
        if (!this.state.session || !this.state.scene)
            return;
        const vertex = this.state.scene.vertices[index];
        if (!vertex)
            return;
        await this.clickLocation(vertexLocation(vertex));
    }
    async clickLocation(location) {
        if (!this.state.session)
            return;
        this.state.error = null;
        this.state.selected = location;
        try {
            const payload = await this.api.moves(this.state.session, location.height, location.coords);
            this.state.moves = payload.moves;
            this.state.note = payload.moves.length
                ? null
                : `no moves apply at height ${location.height}`;
        }
        catch (err) {
            this.state.moves = [];
            this.state.error = describe(err);
        }
        this.emit();
    }
    async applyMove(move) {
        await this.applyStep(moveToStep(move));
    }
    async applyStep(step) {
        if (!this.state.session)
            return;
        this.state.error = null;
        try {
            await this.api.apply(this.state.session, step);
            await this.refresh();
            this.state.selected = null;
            this.state.moves = [];
        }
        catch (err) {
            this.state.error = `step ${this.state.script.length}: ${describe(err)}`;
        }
        this.emit();
    }
    async undo() {
        if (!this.state.session)
            return;
        this.state.error = null;
        try {
            await this.api.undo(this.state.session);
            await this.refresh();
            this.state.selected = null;
            this.state.moves = [];
        }
        catch (err) {
            this.state.error = describe(err);
        }
        this.emit();
    }
    async exportDocument() {
        if (!this.state.session)
            return null;
        try {
            return await this.api.exportDocument(this.state.session);
        }
        catch (err) {
            this.state.error = describe(err);
            this.emit();
            return null;
        }
    }
}
function describe(err) {
    if (err instanceof ApiError)
        return `${err.status}: ${err.message}`;
    return err instanceof Error ? err.message : String(err);
}
