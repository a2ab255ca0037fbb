/* palindrome check */
int main()
{
    char line[500];
    int len, flag = 1;
    int idx;
    scanf("%s", line);
    len = strlen(line);
    for (idx = 0; idx < len / 2; idx++) {
        if (line[idx] != line[len - 1 - idx]) {
                    flag = 0;
                    break;
                }
    }
    if (flag)
        printf("yes\n");
    else
        printf("no\n");
    return 0;
}
