/** Thin fetch client for the session service. The UI never computes kernel
 * semantics; every state change goes through these calls. */
export class ApiError extends Error {
    constructor(status, message) {
        super(message);
        this.status = status;
    }
}
async function expect(response) {
    if (!response.ok) {
        let detail = response.statusText;
        try {
            const body = await response.json();
            if (body && typeof body.error === "string")
                detail = body.error;
        }
        catch {
            // keep the status text
        }
        throw new ApiError(response.status, detail);
    }
    return response.json();
}
export class ServiceClient {
    constructor(base = "") {
        this.base = base;
    }
    async createSession(documentText) {
        return expect(await fetch(`${this.base}/sessions`, {
            method: "POST",
            body: documentText,
        }));
    }
    async state(session) {
        return expect(await fetch(`${this.base}/sessions/${session}/state`));
    }
    async moves(session, height, coords) {
        const params = new URLSearchParams({ height: String(height) });
        if (coords.length)
            params.set("coords", coords.join(","));
        return expect(await fetch(`${this.base}/sessions/${session}/moves?${params}`));
    }
    async apply(session, step) {
        return expect(await fetch(`${this.base}/sessions/${session}/apply`, {
            method: "POST",
            headers: { "content-type": "application/json" },
            body: JSON.stringify(step),
        }));
    }
    async undo(session) {
        return expect(await fetch(`${this.base}/sessions/${session}/undo`, { method: "POST" }));
    }
    async projection(session) {
        return expect(await fetch(`${this.base}/sessions/${session}/projection`));
    }
    async exportDocument(session) {
        const response = await fetch(`${this.base}/sessions/${session}/document`);
        if (!response.ok)
            throw new ApiError(response.status, response.statusText);
        return response.text();
    }
}
