int main()
{
    char line[300];
    int p;
    scanf("%s", line);
    for (p = 0; line[p] != '\0'; p++) {
        if (line[p] >= 'a' && line[p] <= 'z')
            line[p] -= 32;
        else if (line[p] >= 'A' && line[p] <= 'Z')
            line[p] += 32;
    }
    printf("%s\n", line);
    return 0;
}
